#include "lpm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace lpm {

// ---- pipeline -----------------------------------------------------------------

PipelineResult run_pipeline(const PathPair& pair, const PipelineLimits& limits) {
  PipelineResult r;
  r.matroid = enumerate_bases(pair, Int(limits.cap_vertices));
  r.vertices = incidence_vertices(r.matroid);
  const int dim = affine_dimension(r.vertices);
  if (dim > limits.cap_dimension)
    throw std::runtime_error("dimension cap exceeded: " + std::to_string(dim) + " > " +
                             std::to_string(limits.cap_dimension));
  if (dim == 0) {
    r.lattice = FaceLattice{0, 1, {0u, 1u}, {0, 1}, {{0, 1}}};
  } else {
    r.facets = enumerate_facets(r.vertices, FacetLimits{limits.cap_dimension, limits.cap_vertices});
    r.lattice = build_face_lattice(r.vertices, r.facets, limits.cap_faces);
  }
  r.poset = GradedPoset::from_face_lattice(r.lattice);
  r.f_vec = f_vector(r.lattice);
  r.f_poly = toric_f(r.poset);
  r.g_poly = toric_g(r.poset);
  r.h = toric_h_vector(r.poset);
  r.eulerian = is_eulerian(r.poset);
  r.h_palindromic = palindromic(r.h);
  if (r.vertices.size() >= 2) r.metrics = edge_metrics(r.vertices, r.lattice);
  return r;
}

// ---- report plumbing ------------------------------------------------------------

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
std::string bracket_list(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, Int>)
      out += v[i].str();
    else
      out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string rat_set_string(const std::set<Rat>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : s) {
    if (!first) out += ",";
    first = false;
    out += rat_to_string(r);
  }
  return out + "}";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// Runs work(0..count-1) on sweep_parallelism() threads; the first exception
// wins and is rethrown after all workers join.
void parallel_over(std::size_t count, const std::function<void(std::size_t)>& work) {
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(sweep_parallelism()), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void report_instance_times(const std::vector<std::string>& labels,
                           const std::vector<long long>& millis) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cerr << "[time] " << labels[i] << " " << millis[i] << " ms\n";
}

}  // namespace

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.asserted && !r.equal) ++n;
  return n;
}

Json VerificationReport::to_json() const {
  Json jr = Json::array();
  std::size_t asserted = 0;
  for (const auto& r : rows) {
    if (r.asserted) ++asserted;
    Json row;
    row["instance"] = r.instance;
    row["quantity"] = r.quantity;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    row["equal"] = r.equal;
    row["asserted"] = r.asserted;
    row["note"] = r.note;
    jr.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(jr);
  j["summary"] = Json{{"rows", rows.size()}, {"asserted", asserted}, {"failed", failures()}};
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "instance,quantity,computed,expected,equal,asserted,note\n";
  for (const auto& r : rows) {
    out += csv_escape(r.instance) + ',' + csv_escape(r.quantity) + ',' + csv_escape(r.computed) +
           ',' + csv_escape(r.expected) + ',' + bool_str(r.equal) + ',' + bool_str(r.asserted) +
           ',' + csv_escape(r.note) + '\n';
  }
  return out;
}

std::size_t IdentityReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.asserted && !r.equal) ++n;
  return n;
}

Json IdentityReport::to_json() const {
  Json jr = Json::array();
  std::size_t asserted = 0;
  for (const auto& r : rows) {
    if (r.asserted) ++asserted;
    Json row;
    row["identity"] = r.identity;
    row["m"] = r.m;
    row["n"] = r.n;
    if (r.q)
      row["q"] = *r.q;
    else
      row["q"] = nullptr;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["equal"] = r.equal;
    row["asserted"] = r.asserted;
    row["note"] = r.note;
    jr.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(jr);
  j["summary"] = Json{{"rows", rows.size()}, {"asserted", asserted}, {"failed", failures()}};
  return j;
}

std::string IdentityReport::to_csv() const {
  std::string out = "identity,m,n,q,lhs,rhs,equal,asserted,note\n";
  for (const auto& r : rows) {
    out += csv_escape(r.identity) + ',' + std::to_string(r.m) + ',' + std::to_string(r.n) + ',' +
           (r.q ? std::to_string(*r.q) : std::string()) + ',' + csv_escape(r.lhs) + ',' +
           csv_escape(r.rhs) + ',' + bool_str(r.equal) + ',' + bool_str(r.asserted) + ',' +
           csv_escape(r.note) + '\n';
  }
  return out;
}

// ---- hook sweep -----------------------------------------------------------------

namespace {

// toric_g + x * toric_f of the base facet's lower interval; the apex of the
// hook polytope is the basis {alpha+1, ..., alpha+beta}.
IntPolynomial pyramid_assembled_f(const PipelineResult& pr, int alpha, int beta) {
  Basis apex(beta);
  for (int i = 0; i < beta; ++i) apex[i] = alpha + 1 + i;
  const auto it = std::lower_bound(pr.matroid.bases.begin(), pr.matroid.bases.end(), apex);
  if (it == pr.matroid.bases.end() || *it != apex)
    throw std::logic_error("apex basis missing from enumeration");
  const int apex_idx = static_cast<int>(it - pr.matroid.bases.begin());

  const std::size_t nv = pr.vertices.size();
  const std::uint64_t full =
      (nv == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << nv) - 1);
  const std::uint64_t base_mask = full & ~(std::uint64_t(1) << apex_idx);
  int base_face = -1;
  for (std::size_t i = 0; i < pr.lattice.faces.size(); ++i)
    if (pr.lattice.faces[i] == base_mask) {
      base_face = static_cast<int>(i);
      break;
    }
  if (base_face < 0) throw std::logic_error("base facet missing from face lattice");

  const GradedPoset base = pr.poset.lower_interval(base_face);
  return toric_g(base) + IntPolynomial::monomial(Int(1), 1) * toric_f(base);
}

std::vector<ReportRow> hook_instance_rows(int alpha, int beta, const PipelineLimits& limits) {
  const std::string instance = "hook(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  const PipelineResult pr = run_pipeline(hook_pair(alpha, beta), limits);
  const bool simplex = beta < 2;  // swept with beta <= alpha, so beta == 1

  std::vector<ReportRow> rows;
  auto add = [&](std::string quantity, std::string computed, std::string expected,
                 std::string note = {}) {
    bool equal = computed == expected;
    rows.push_back({instance, std::move(quantity), std::move(computed), std::move(expected), equal,
                    true, std::move(note)});
  };

  add("f_vector", bracket_list(pr.f_vec), bracket_list(hook_f_vector(alpha, beta)));
  add("toric_f", pr.f_poly.to_string(), hook_f_closed(alpha, beta).to_string());
  add("toric_g", pr.g_poly.to_string(), hook_g_closed(alpha, beta).to_string());
  add("edge_sq_lengths", rat_set_string(pr.metrics.edge_sq_lengths), "{2/1}");
  add("graph_diameter", std::to_string(pr.metrics.graph_diameter), simplex ? "1" : "2",
      simplex ? "simplex: complete graph" : "");
  add("max_sq_distance", rat_to_string(pr.metrics.max_sq_distance), simplex ? "2/1" : "4/1",
      simplex ? "simplex case" : "");
  add("eulerian", bool_str(pr.eulerian), "true");
  add("h_palindromic", bracket_list(pr.h),
      bracket_list(std::vector<Int>(pr.h.rbegin(), pr.h.rend())), "h-vector vs its reverse");
  add("euler_relation", bool_str(euler_relation_holds(pr.lattice)), "true");
  add("diamond_property", bool_str(diamond_property_holds(pr.lattice)), "true");
  add("pyramid_relation", pr.f_poly.to_string(), pyramid_assembled_f(pr, alpha, beta).to_string());
  return rows;
}

}  // namespace

VerificationReport verify_hooks(const SweepConfig& config) {
  if (config.alpha_max < 1) throw std::invalid_argument("alpha bound must be >= 1");
  const int beta_cap = config.beta_max > 0 ? config.beta_max : config.alpha_max;
  std::vector<std::pair<int, int>> instances;
  for (int alpha = 1; alpha <= config.alpha_max; ++alpha)
    for (int beta = 1; beta <= std::min(alpha, beta_cap); ++beta)
      instances.emplace_back(alpha, beta);

  std::vector<std::vector<ReportRow>> slots(instances.size());
  std::vector<std::string> labels(instances.size());
  std::vector<long long> millis(instances.size());
  parallel_over(instances.size(), [&](std::size_t i) {
    const auto [alpha, beta] = instances[i];
    const auto start = std::chrono::steady_clock::now();
    slots[i] = hook_instance_rows(alpha, beta, config.limits);
    const auto stop = std::chrono::steady_clock::now();
    labels[i] = "hook(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    millis[i] = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  });
  report_instance_times(labels, millis);

  VerificationReport report;
  for (auto& rows : slots)
    for (auto& r : rows) report.rows.push_back(std::move(r));
  return report;
}

// ---- identity sweep --------------------------------------------------------------

namespace {

std::vector<IdentityRow> identity_instance_rows(int m, int n) {
  std::vector<IdentityRow> rows;

  for (long long q = -3; q <= m + n + 2; ++q) {
    const bool in_range = q >= -1 && q <= m + n;
    const IdentityPair p = binomial_convolution_identity(m, n, q);
    std::string note;
    if (q == m + n)
      note = "vandermonde";
    else if (!in_range)
      note = "outside asserted range";
    rows.push_back({"convolution_main", m, n, q, p.lhs.str(), p.rhs.str(), p.equal(), in_range,
                    std::move(note)});
  }

  for (long long q = -1; q <= m + n; ++q) {
    // inner: aggregated over (k, i); mismatches expand into their own rows.
    std::size_t cases = 0, agreed = 0;
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= n - k; ++i) {
        const IdentityPair p = convolution_inner_identity(q, k, i);
        ++cases;
        if (p.equal())
          ++agreed;
        else
          rows.push_back({"convolution_inner", m, n, q, p.lhs.str(), p.rhs.str(), false, true,
                          "k=" + std::to_string(k) + ",i=" + std::to_string(i)});
      }
    const std::string tally = "agree:" + std::to_string(agreed) + "/" + std::to_string(cases);
    rows.push_back({"convolution_inner", m, n, q, tally, tally, agreed == cases, true, ""});

    cases = agreed = 0;
    for (int k = 0; k <= n; ++k) {
      const IdentityPair p = convolution_middle_identity(n, q, k);
      ++cases;
      if (p.equal())
        ++agreed;
      else
        rows.push_back({"convolution_middle", m, n, q, p.lhs.str(), p.rhs.str(), false, true,
                        "k=" + std::to_string(k)});
    }
    const std::string mid_tally = "agree:" + std::to_string(agreed) + "/" + std::to_string(cases);
    rows.push_back({"convolution_middle", m, n, q, mid_tally, mid_tally, agreed == cases, true, ""});

    const IdentityPair outer = convolution_outer_identity(m, n, q);
    rows.push_back(
        {"convolution_outer", m, n, q, outer.lhs.str(), outer.rhs.str(), outer.equal(), true, ""});
  }

  const LaurentPolynomial augmented = augmented_f_shifted(m, n);
  const IntPolynomial f_shifted = product_f_closed(m, n).shifted(Int(1));
  const IntPolynomial g_shifted = product_g_closed(m, n).shifted(Int(1));

  for (int r = 0; r <= m + n; ++r) {
    const Int via_matrix = product_f_shifted_coeff_matrix(m, n, r);
    const Int direct = product_f_shifted_coeff_direct(m, n, r);
    rows.push_back({"shifted_coeff_two_ways", m, n, std::nullopt, via_matrix.str(), direct.str(),
                    via_matrix == direct, true, "r=" + std::to_string(r)});
    rows.push_back({"shifted_coeff_vs_polynomial", m, n, std::nullopt, direct.str(),
                    f_shifted.coeff(r).str(), direct == f_shifted.coeff(r), true,
                    "r=" + std::to_string(r)});
  }
  for (int r = -1; r <= m + n; ++r) {
    const Int closed = augmented_f_coeff(m, n, r);
    rows.push_back({"augmented_coeff", m, n, std::nullopt, closed.str(), augmented.coeff(r).str(),
                    closed == augmented.coeff(r), true, "r=" + std::to_string(r)});
  }

  const LaurentPolynomial bridge =
      LaurentPolynomial(f_shifted) + LaurentPolynomial(g_shifted).times_x_power(-1);
  rows.push_back({"laurent_bridge", m, n, std::nullopt, augmented.to_string(), bridge.to_string(),
                  augmented == bridge, true, ""});

  const LaurentPolynomial telescoped = telescoping_row_sum(m, n);
  const LaurentPolynomial target = LaurentPolynomial::monomial(Int(1), m + n);
  rows.push_back({"telescoping", m, n, std::nullopt, telescoped.to_string(), target.to_string(),
                  telescoped == target, true, ""});
  return rows;
}

}  // namespace

IdentityReport verify_identities(const SweepConfig& config) {
  if (config.m_max < 0 || config.n_max < 0)
    throw std::invalid_argument("identity bounds must be >= 0");
  std::vector<std::pair<int, int>> instances;
  for (int m = 0; m <= config.m_max; ++m)
    for (int n = 0; n <= std::min(m, config.n_max); ++n) instances.emplace_back(m, n);

  std::vector<std::vector<IdentityRow>> slots(instances.size());
  std::vector<std::string> labels(instances.size());
  std::vector<long long> millis(instances.size());
  parallel_over(instances.size(), [&](std::size_t i) {
    const auto [m, n] = instances[i];
    const auto start = std::chrono::steady_clock::now();
    slots[i] = identity_instance_rows(m, n);
    const auto stop = std::chrono::steady_clock::now();
    labels[i] = "identities(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    millis[i] = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  });
  report_instance_times(labels, millis);

  IdentityReport report;
  for (auto& rows : slots)
    for (auto& r : rows) report.rows.push_back(std::move(r));
  return report;
}

// ---- border strip ------------------------------------------------------------------

Json BorderStripResult::to_json() const {
  Json j;
  j["toric_g_actual"] = polynomial_to_json(pipeline.g_poly);
  j["product_formula"] = polynomial_to_json(candidate);
  j["equal"] = equal;
  return j;
}

BorderStripResult border_strip_report(int a, int b, int c, const PipelineLimits& limits) {
  BorderStripResult result;
  result.pipeline = run_pipeline(border_strip_pair(a, b, c), limits);
  // c = 1 collapses the strip to the hook, where the candidate must agree with
  // the hook closed form — the degenerate third factor is omitted rather than
  // read as C(0,k), which would zero every positive-degree term.
  std::vector<Int> coeffs(c == 1 ? std::min(a, b) : std::min({a, b, c}));
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    coeffs[k] = binomial(a - 1, k) * binomial(b - 1, k);
    if (c > 1) coeffs[k] *= binomial(c - 1, k);
  }
  result.candidate = IntPolynomial(std::move(coeffs));
  result.equal = result.pipeline.g_poly == result.candidate;
  return result;
}

int sweep_parallelism() {
  const char* env = std::getenv("LPM_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(std::min(v, 64L));
}

}  // namespace lpm
