#include "lpm/json_io.hpp"
#include "lpm/verify.hpp"

#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

namespace {

// stdout by default; --out writes the same bytes to a file.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return f ? 0 : 2;
}

lpm::PathPair parse_pair(const std::string& upper, const std::string& lower) {
  return lpm::validate_pair(lpm::parse_path(upper), lpm::parse_path(lower));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pipeline for lattice-path matroid polytopes: base enumeration, facet and "
               "face-lattice construction, toric f/g polynomials, closed-form sweeps, and "
               "binomial-identity checks"};
  app.require_subcommand(1);

  std::string upper, lower, format = "json", out_path;
  lpm::SweepConfig config;
  int strip_a = 0, strip_b = 0, strip_c = 0;

  const std::string cap_vertices_help = "largest admissible vertex count";
  const std::string cap_faces_help = "largest admissible face-lattice size";

  auto* bases = app.add_subcommand("bases", "enumerate the bases between two bounding paths");
  bases->add_option("upper", upper, "upper bounding path, e.g. NENE")->required();
  bases->add_option("lower", lower, "lower bounding path, e.g. EENN")->required();
  bases->add_option("--out", out_path, "write to file instead of stdout");

  auto* toric = app.add_subcommand("toric", "polytope, face lattice, and toric f/g for a path pair");
  toric->add_option("upper", upper, "upper bounding path")->required();
  toric->add_option("lower", lower, "lower bounding path")->required();
  toric->add_option("--cap-vertices", config.limits.cap_vertices, cap_vertices_help);
  toric->add_option("--cap-faces", config.limits.cap_faces, cap_faces_help);
  toric->add_option("--out", out_path, "write to file instead of stdout");

  auto* hooks = app.add_subcommand("verify-hooks", "sweep hook polytopes against their closed forms");
  hooks->add_option("--alpha-max", config.alpha_max, "largest row parameter (default 4)");
  hooks->add_option("--beta-max", config.beta_max, "column bound (default: follow --alpha-max)");
  hooks->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  hooks->add_option("--out", out_path, "write to file instead of stdout");
  hooks->add_option("--cap-vertices", config.limits.cap_vertices, cap_vertices_help);
  hooks->add_option("--cap-faces", config.limits.cap_faces, cap_faces_help);

  auto* identities = app.add_subcommand("identities", "sweep the binomial convolution identities");
  identities->add_option("--m-max", config.m_max, "largest first parameter (default 8)");
  identities->add_option("--n-max", config.n_max, "largest second parameter (default 8)");
  identities->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  identities->add_option("--out", out_path, "write to file instead of stdout");

  auto* strip = app.add_subcommand(
      "border-strip", "toric g of a width-one-strip polytope vs the triple-product formula");
  strip->add_option("a", strip_a, "first arm length")->required()->check(CLI::PositiveNumber);
  strip->add_option("b", strip_b, "middle arm length")->required()->check(CLI::PositiveNumber);
  strip->add_option("c", strip_c, "last arm length")->required()->check(CLI::PositiveNumber);
  strip->add_option("--cap-vertices", config.limits.cap_vertices, cap_vertices_help);
  strip->add_option("--cap-faces", config.limits.cap_faces, cap_faces_help);
  strip->add_option("--out", out_path, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bases->parsed()) {
      const auto m = lpm::enumerate_bases(parse_pair(upper, lower));
      return emit(lpm::canonical_dump(lpm::matroid_to_json(m)), out_path);
    }
    if (toric->parsed()) {
      const auto pr = lpm::run_pipeline(parse_pair(upper, lower), config.limits);
      lpm::Json j;
      j["f_vector"] = pr.f_vec;
      j["toric_f"] = lpm::polynomial_to_json(pr.f_poly);
      j["toric_g"] = lpm::polynomial_to_json(pr.g_poly);
      j["h_symmetric"] = pr.h_palindromic;
      j["eulerian"] = pr.eulerian;
      return emit(lpm::canonical_dump(j), out_path);
    }
    if (hooks->parsed()) {
      const auto report = lpm::verify_hooks(config);
      const int rc =
          emit(format == "csv" ? report.to_csv() : lpm::canonical_dump(report.to_json()), out_path);
      if (rc != 0) return rc;
      if (!report.ok()) {
        std::cerr << "error: " << report.failures() << " asserted comparisons failed\n";
        return 1;
      }
      return 0;
    }
    if (identities->parsed()) {
      const auto report = lpm::verify_identities(config);
      const int rc =
          emit(format == "csv" ? report.to_csv() : lpm::canonical_dump(report.to_json()), out_path);
      if (rc != 0) return rc;
      if (!report.ok()) {
        std::cerr << "error: " << report.failures() << " asserted comparisons failed\n";
        return 1;
      }
      return 0;
    }
    if (strip->parsed()) {
      const auto result = lpm::border_strip_report(strip_a, strip_b, strip_c, config.limits);
      return emit(lpm::canonical_dump(result.to_json()), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
