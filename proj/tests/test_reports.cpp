#include "lpm/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

using lpm::Int;
using lpm::IntPolynomial;
using lpm::Rat;

TEST_CASE("pipeline on the smallest pyramid") {
  const lpm::PipelineResult pr = lpm::run_pipeline(lpm::hook_pair(2, 2));
  CHECK(pr.matroid.ground_size == 4);
  CHECK(pr.matroid.rank == 2);
  CHECK(pr.matroid.bases.size() == 5);
  CHECK(pr.vertices.size() == 5);
  CHECK(pr.facets.size() == 5);
  CHECK(pr.lattice.faces.size() == 20);
  CHECK(pr.f_vec == std::vector<long long>{5, 8, 5, 1});
  CHECK(pr.f_poly.to_string() == "1 + 2x + 2x^2 + x^3");
  CHECK(pr.g_poly.to_string() == "1 + x");
  CHECK(pr.h == std::vector<Int>{Int(1), Int(2), Int(2), Int(1)});
  CHECK(pr.eulerian);
  CHECK(pr.h_palindromic);
  CHECK(pr.metrics.edge_sq_lengths == std::set<Rat>{Rat(2)});
  CHECK(pr.metrics.graph_diameter == 2);
  CHECK(pr.metrics.max_sq_distance == Rat(4));
}

TEST_CASE("pipeline on a single-basis pair") {
  const lpm::PathPair pair =
      lpm::validate_pair(lpm::parse_path("NE"), lpm::parse_path("NE"));
  const lpm::PipelineResult pr = lpm::run_pipeline(pair);
  CHECK(pr.matroid.bases == std::vector<lpm::Basis>{{1}});
  CHECK(pr.vertices.size() == 1);
  CHECK(pr.facets.empty());
  CHECK(pr.lattice.dim == 0);
  CHECK(pr.lattice.faces == std::vector<std::uint64_t>{0, 1});
  CHECK(pr.lattice.hasse == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(pr.f_vec == std::vector<long long>{1});
  CHECK(pr.f_poly == IntPolynomial{Int(1)});
  CHECK(pr.g_poly == IntPolynomial{Int(1)});
  CHECK(pr.h == std::vector<Int>{Int(1)});
  CHECK(pr.eulerian);
  CHECK(pr.h_palindromic);
  CHECK(pr.metrics.edge_sq_lengths.empty());
  CHECK(pr.metrics.graph_diameter == 0);
  CHECK(pr.metrics.max_sq_distance == 0);
}

TEST_CASE("pipeline enforces its caps") {
  lpm::PipelineLimits tight;
  tight.cap_vertices = 10;
  CHECK_THROWS_AS(lpm::run_pipeline(lpm::hook_pair(4, 4), tight), std::runtime_error);

  lpm::PipelineLimits flat;
  flat.cap_dimension = 2;
  CHECK_THROWS_WITH_AS(lpm::run_pipeline(lpm::hook_pair(2, 2), flat),
                       doctest::Contains("dimension cap"), std::runtime_error);

  lpm::PipelineLimits few_faces;
  few_faces.cap_faces = 10;
  CHECK_THROWS_WITH_AS(lpm::run_pipeline(lpm::hook_pair(2, 2), few_faces),
                       doctest::Contains("face cap"), std::runtime_error);
}

TEST_CASE("hook sweep report") {
  lpm::SweepConfig config;
  config.alpha_max = 3;
  const lpm::VerificationReport report = lpm::verify_hooks(config);
  CHECK(report.rows.size() == 66);  // 6 instances x 11 quantities
  CHECK(report.ok());
  for (const auto& row : report.rows) {
    CHECK(row.equal);
    CHECK(row.asserted);
  }

  auto find = [&](const std::string& instance, const std::string& quantity) {
    const auto it = std::find_if(report.rows.begin(), report.rows.end(), [&](const auto& r) {
      return r.instance == instance && r.quantity == quantity;
    });
    REQUIRE(it != report.rows.end());
    return *it;
  };
  CHECK(find("hook(3,2)", "toric_g").computed == "1 + 2x");
  CHECK(find("hook(3,2)", "f_vector").computed == "[7,15,14,6,1]");
  CHECK(find("hook(2,2)", "max_sq_distance").expected == "4/1");
  CHECK(find("hook(2,2)", "h_palindromic").note == "h-vector vs its reverse");
  // one-row instances are simplices: diameter 1, farthest vertices at distance 2
  CHECK(find("hook(3,1)", "graph_diameter").expected == "1");
  CHECK(find("hook(3,1)", "graph_diameter").note == "simplex: complete graph");
  CHECK(find("hook(3,1)", "max_sq_distance").expected == "2/1");
  CHECK(find("hook(1,1)", "edge_sq_lengths").computed == "{2/1}");

  const lpm::Json j = report.to_json();
  CHECK(j["summary"]["rows"] == 66);
  CHECK(j["summary"]["asserted"] == 66);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("hook sweep restricted to one-row shapes") {
  lpm::SweepConfig config;
  config.alpha_max = 4;
  config.beta_max = 1;
  const lpm::VerificationReport report = lpm::verify_hooks(config);
  CHECK(report.rows.size() == 44);
  CHECK(report.ok());
  for (const auto& row : report.rows) CHECK(row.instance.ends_with(",1)"));
}

TEST_CASE("identity sweep report") {
  lpm::SweepConfig config;
  config.m_max = 2;
  config.n_max = 2;
  const lpm::IdentityReport report = lpm::verify_identities(config);
  // per instance: (m+n+6) main + 3(m+n+2) aggregated subs + 2(m+n+1)
  // coefficient rows + (m+n+2) augmented + bridge + telescoping
  CHECK(report.rows.size() == 192);
  CHECK(report.ok());

  std::size_t informational = 0, vandermonde = 0, no_q = 0;
  for (const auto& row : report.rows) {
    CHECK(row.equal);  // out-of-range rows still agree (both sides vanish)
    if (!row.asserted) {
      ++informational;
      CHECK(row.identity == "convolution_main");
      CHECK(row.note == "outside asserted range");
    }
    if (row.note == "vandermonde") {
      ++vandermonde;
      REQUIRE(row.q.has_value());
      CHECK(*row.q == row.m + row.n);
    }
    if (!row.q.has_value()) ++no_q;
  }
  CHECK(informational == 24);  // 4 out-of-range q per instance
  CHECK(vandermonde == 6);     // one per instance
  // coefficient rows, augmented rows, bridge, telescoping are not q-indexed
  CHECK(no_q == 2 * (12 + 6) + (12 + 12) + 6 + 6);

  const auto& last = report.rows.back();
  CHECK(last.identity == "telescoping");
  CHECK(last.lhs == "x^4");
  CHECK(last.rhs == "x^4");

  const lpm::Json j = report.to_json();
  CHECK(j["summary"]["failed"] == 0);
  bool saw_null_q = false;
  for (const auto& row : j["rows"])
    if (row["q"].is_null()) saw_null_q = true;
  CHECK(saw_null_q);
}

TEST_CASE("csv rendering") {
  lpm::VerificationReport vr;
  vr.rows.push_back({"hook(2,2)", "toric_g", "1 + x", "1 + x", true, true, ""});
  vr.rows.push_back({"inst", "q", "a,b", "he said \"hi\", twice", false, false, "line\nbreak"});
  const std::string csv = vr.to_csv();
  CHECK(csv.starts_with("instance,quantity,computed,expected,equal,asserted,note\n"));
  // the instance name itself carries a comma, so it is quoted
  CHECK(csv.find("\"hook(2,2)\",toric_g,1 + x,1 + x,true,true,\n") != std::string::npos);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"he said \"\"hi\"\", twice\"") != std::string::npos);
  CHECK(csv.find("\"line\nbreak\"") != std::string::npos);
  CHECK(vr.failures() == 0);  // the unequal row is informational

  lpm::IdentityReport ir;
  ir.rows.push_back({"telescoping", 2, 2, std::nullopt, "x^4", "x^4", true, true, ""});
  ir.rows.push_back({"convolution_main", 1, 0, -2, "0", "0", true, false, "outside asserted range"});
  const std::string icsv = ir.to_csv();
  CHECK(icsv.starts_with("identity,m,n,q,lhs,rhs,equal,asserted,note\n"));
  CHECK(icsv.find("telescoping,2,2,,x^4,x^4,true,true,\n") != std::string::npos);
  CHECK(icsv.find("convolution_main,1,0,-2,0,0,true,false,outside asserted range\n") !=
        std::string::npos);
}

TEST_CASE("border strip comparisons") {
  const lpm::BorderStripResult wide = lpm::border_strip_report(2, 2, 2);
  CHECK(wide.pipeline.g_poly == IntPolynomial{Int(1), Int(3), Int(1)});
  CHECK(wide.candidate == IntPolynomial{Int(1), Int(1)});
  CHECK_FALSE(wide.equal);
  const lpm::Json j = wide.to_json();
  CHECK(j["equal"] == false);
  CHECK(j["toric_g_actual"]["coeffs"] == lpm::Json::array({1, 3, 1}));
  CHECK(j["product_formula"]["coeffs"] == lpm::Json::array({1, 1}));

  // c = 1 collapses to the hook shape, where the product form is exact
  const lpm::BorderStripResult hook = lpm::border_strip_report(2, 2, 1);
  CHECK(hook.candidate == IntPolynomial{Int(1), Int(1)});
  CHECK(hook.equal);
  CHECK(lpm::border_strip_report(1, 1, 1).equal);
}

TEST_CASE("json serialization schemas") {
  const lpm::PipelineResult square = lpm::run_pipeline(lpm::hook_pair(2, 2));
  const lpm::Json jm = lpm::matroid_to_json(square.matroid);
  const lpm::Json expected_m = {
      {"ground_size", 4},
      {"rank", 2},
      {"bases", {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}};
  CHECK(jm == expected_m);

  const lpm::PipelineResult segment = lpm::run_pipeline(lpm::hook_pair(1, 1));
  const lpm::Json jp = lpm::polytope_to_json(segment.vertices, segment.facets, segment.f_vec);
  const lpm::Json expected_vertices = lpm::Json::array(
      {lpm::Json::array({"1/1", "0/1"}), lpm::Json::array({"0/1", "1/1"})});
  CHECK(jp["vertices"] == expected_vertices);
  CHECK(jp["f_vector"] == lpm::Json::array({2, 1}));
  REQUIRE(jp["facets"].size() == 2);
  for (const auto& facet : jp["facets"]) {
    CHECK(facet.contains("normal"));
    CHECK(facet.contains("offset"));
    CHECK(facet["offset"].is_string());
    CHECK(facet["tight"].size() == 1);
  }

  const lpm::Json jposet = lpm::poset_to_json(segment.poset);
  CHECK(jposet["ranks"] == lpm::Json::array({0, 1, 1, 2}));
  CHECK(jposet["hasse"] == lpm::Json({{0, 1}, {0, 2}, {1, 3}, {2, 3}}));

  CHECK(lpm::polynomial_to_json(IntPolynomial{Int(1), Int(2), Int(1)}) ==
        lpm::Json({{"coeffs", {1, 2, 1}}, {"min_degree", 0}}));
  CHECK(lpm::polynomial_to_json(lpm::LaurentPolynomial(-1, {Int(2), Int(3)})) ==
        lpm::Json({{"coeffs", {2, 3}}, {"min_degree", -1}}));
}

TEST_CASE("canonical dumps are byte-stable and sorted") {
  lpm::Json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  const std::string dump = lpm::canonical_dump(j);
  CHECK(dump.back() == '\n');
  CHECK(dump.find("alpha") < dump.find("zeta"));

  lpm::SweepConfig config;
  config.alpha_max = 2;
  const std::string first = lpm::canonical_dump(lpm::verify_hooks(config).to_json());
  const std::string second = lpm::canonical_dump(lpm::verify_hooks(config).to_json());
  CHECK(first == second);
}

TEST_CASE("worker count from the environment") {
  const char* saved = std::getenv("LPM_THREADS");
  const std::string backup = saved ? saved : "";

  unsetenv("LPM_THREADS");
  CHECK(lpm::sweep_parallelism() == 1);
  setenv("LPM_THREADS", "4", 1);
  CHECK(lpm::sweep_parallelism() == 4);
  setenv("LPM_THREADS", "0", 1);
  CHECK(lpm::sweep_parallelism() == 1);
  setenv("LPM_THREADS", "-3", 1);
  CHECK(lpm::sweep_parallelism() == 1);
  setenv("LPM_THREADS", "junk", 1);
  CHECK(lpm::sweep_parallelism() == 1);
  setenv("LPM_THREADS", "500", 1);
  CHECK(lpm::sweep_parallelism() == 64);

  if (saved)
    setenv("LPM_THREADS", backup.c_str(), 1);
  else
    unsetenv("LPM_THREADS");
}

TEST_CASE("parallel sweep output matches serial output byte for byte") {
  lpm::SweepConfig config;
  config.alpha_max = 3;

  const char* saved = std::getenv("LPM_THREADS");
  const std::string backup = saved ? saved : "";

  unsetenv("LPM_THREADS");
  const std::string serial = lpm::verify_hooks(config).to_csv();
  setenv("LPM_THREADS", "3", 1);
  const std::string parallel = lpm::verify_hooks(config).to_csv();
  CHECK(serial == parallel);

  if (saved)
    setenv("LPM_THREADS", backup.c_str(), 1);
  else
    unsetenv("LPM_THREADS");
}
