#pragma once

#include "lpm/face_lattice.hpp"
#include "lpm/geometry.hpp"
#include "lpm/hook_formulas.hpp"
#include "lpm/json_io.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"
#include "lpm/polynomial.hpp"
#include "lpm/poset.hpp"
#include "lpm/toric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lpm {

// ---- full pipeline ----------------------------------------------------------

struct PipelineLimits {
  std::size_t cap_vertices = 40;
  int cap_dimension = 10;
  std::size_t cap_faces = 5000;
};

// Everything computed from a pair of bounding paths: bases, the 0/1 polytope,
// facets, face lattice, poset, f-vector, toric polynomials, h-vector with its
// palindromy flag, Eulerian flag, and exact edge metrics.
struct PipelineResult {
  LatticePathMatroid matroid;
  std::vector<Point> vertices;
  std::vector<Facet> facets;  // empty for a 0-dimensional polytope
  FaceLattice lattice;
  GradedPoset poset;
  std::vector<long long> f_vec;
  IntPolynomial f_poly;
  IntPolynomial g_poly;
  std::vector<Int> h;
  bool eulerian = false;
  bool h_palindromic = false;
  EdgeMetrics metrics;  // zero diameter/distance for fewer than 2 vertices
};

// Runs bases -> vertices -> facets -> face lattice -> poset -> toric -> metrics.
// A single-basis pair yields the two-element lattice (empty face < point).
// Throws when a cap in `limits` is exceeded.
PipelineResult run_pipeline(const PathPair& pair, const PipelineLimits& limits = {});

// ---- verification reports ---------------------------------------------------

struct ReportRow {
  std::string instance;  // e.g. "hook(3,2)"
  std::string quantity;  // e.g. "toric_g"
  std::string computed;
  std::string expected;
  bool equal = false;
  bool asserted = true;  // informational rows never fail a report
  std::string note;
};

struct VerificationReport {
  std::vector<ReportRow> rows;

  std::size_t failures() const;  // asserted rows with equal == false
  bool ok() const { return failures() == 0; }

  Json to_json() const;        // {"rows": [...], "summary": {...}}
  std::string to_csv() const;  // instance,quantity,computed,expected,equal,asserted,note
};

struct IdentityRow {
  std::string identity;  // which identity family the row checks
  int m = 0;
  int n = 0;
  std::optional<long long> q;  // absent for rows not indexed by q
  std::string lhs;
  std::string rhs;
  bool equal = false;
  bool asserted = true;
  std::string note;
};

struct IdentityReport {
  std::vector<IdentityRow> rows;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }

  Json to_json() const;
  std::string to_csv() const;  // identity,m,n,q,lhs,rhs,equal,asserted,note
};

// ---- sweeps -------------------------------------------------------------------

struct SweepConfig {
  int alpha_max = 4;
  int beta_max = 0;  // 0: follow alpha_max (sweep is over beta <= alpha)
  int m_max = 8;
  int n_max = 8;
  PipelineLimits limits;
};

// For every 1 <= beta <= min(alpha, beta_max), beta <= alpha <= alpha_max:
// f-vector, toric f, toric g, squared edge lengths, graph diameter, max
// squared vertex distance, Eulerian flag, h palindromy, and the pyramid
// decomposition toric_f = g_base + x*f_base over the base facet's lower
// interval — each against its closed form.  Diameter 2 / max distance 4 hold
// for beta >= 2; beta = 1 gives a simplex, checked against 1 / 2 instead.
VerificationReport verify_hooks(const SweepConfig& config);

// Binomial-identity sweep over 0 <= n <= min(m, n_max) <= m <= m_max:
// the main convolution identity (q swept past the stated range; outside
// [-1, m+n] rows are informational), its three sub-identities (aggregated
// over their inner indices, expanded on mismatch), the shifted-coefficient
// comparisons, the augmented-polynomial coefficient formula, the Laurent
// bridge between the product f and its augmentation, and the telescoping row
// sum.
IdentityReport verify_identities(const SweepConfig& config);

struct BorderStripResult {
  PipelineResult pipeline;
  // sum_k C(a-1,k) C(b-1,k) C(c-1,k) x^k; at c = 1 (strip degenerates to the
  // hook) the third factor is omitted so the candidate matches the hook form.
  IntPolynomial candidate;
  bool equal = false;  // toric g == candidate (recorded, never asserted)

  Json to_json() const;  // {"toric_g_actual": ..., "product_formula": ..., "equal": ...}
};

// Builds the width-one-strip path pair, runs the pipeline, and compares the
// toric g-polynomial against the triple-product candidate.
BorderStripResult border_strip_report(int a, int b, int c, const PipelineLimits& limits = {});

// Worker count for sweep parallelism: the LPM_THREADS environment variable,
// clamped to >= 1 (default 1).
int sweep_parallelism();

}  // namespace lpm
