#include "lpm/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace lpm {

namespace {

std::int64_t to_i64(const Int& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

}  // namespace

Json matroid_to_json(const LatticePathMatroid& m) {
  Json j;
  j["ground_size"] = m.ground_size;
  j["rank"] = m.rank;
  j["bases"] = m.bases;
  return j;
}

Json polytope_to_json(const std::vector<Point>& vertices, const std::vector<Facet>& facets,
                      const std::vector<long long>& f_vector) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : vertices) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(rat_to_string(c));
    vs.push_back(std::move(row));
  }
  j["vertices"] = std::move(vs);
  Json fs = Json::array();
  for (const auto& f : facets) {
    Json jf;
    Json normal = Json::array();
    for (const auto& c : f.plane.normal) normal.push_back(to_i64(c, "facet normal entry"));
    jf["normal"] = std::move(normal);
    jf["offset"] = f.plane.offset.str();
    jf["tight"] = f.tight;
    fs.push_back(std::move(jf));
  }
  j["facets"] = std::move(fs);
  j["f_vector"] = f_vector;
  return j;
}

Json poset_to_json(const GradedPoset& p) {
  Json j;
  std::vector<int> ranks(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) ranks[i] = p.rank(static_cast<int>(i));
  j["ranks"] = std::move(ranks);
  Json h = Json::array();
  for (const auto& [lower, upper] : p.hasse()) h.push_back(Json::array({lower, upper}));
  j["hasse"] = std::move(h);
  return j;
}

namespace {

Json coeffs_json(const std::vector<Int>& coeffs, int min_degree) {
  Json j;
  std::vector<std::int64_t> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(to_i64(c, "polynomial coefficient"));
  j["coeffs"] = std::move(cs);
  j["min_degree"] = min_degree;
  return j;
}

}  // namespace

Json polynomial_to_json(const IntPolynomial& p) { return coeffs_json(p.coeffs(), 0); }

Json polynomial_to_json(const LaurentPolynomial& p) {
  return coeffs_json(p.coeffs(), p.min_degree());
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lpm
