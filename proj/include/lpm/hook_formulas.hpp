#pragma once

#include "lpm/numbers.hpp"
#include "lpm/polynomial.hpp"

#include <vector>

namespace lpm {

// Closed forms for the hook polytope P(alpha, beta) — the pyramid over the
// simplex product D_{alpha-1} x D_{beta-1} — and for the simplex product
// itself, written with parameters m = alpha - 1, n = beta - 1 throughout.

// Number of i-dimensional faces of D_{alpha-1} x D_{beta-1}; the index -1
// (empty face) counts 1.  r_i = sum_k C(alpha, k) C(beta, i + 2 - k).
Int hook_base_face_count(int alpha, int beta, int i);

// f-vector of the hook polytope: f_i = r_i + r_{i-1} for 0 <= i <=
// alpha + beta - 1 (pyramid: faces of the base plus pyramids over them).
std::vector<long long> hook_f_vector(int alpha, int beta);

// Partial diagonal sums S_l = sum_{k<=l} C(alpha-1, k) C(beta-1, k).
Int hook_s(int alpha, int beta, int ell);

// Toric g-polynomial of the hook polytope:
//   sum_k C(alpha-1, k) C(beta-1, k) x^k,  k < min(alpha, beta).
IntPolynomial hook_g_closed(int alpha, int beta);

// Toric f-polynomial of the hook polytope: palindromic three-block form
//   S_0, ..., S_{beta-1}, then S_{beta-1} repeated, then mirrored back down,
// of degree alpha + beta - 1 (parameters normalized so beta <= alpha).
IntPolynomial hook_f_closed(int alpha, int beta);

// Toric g of the simplex product D_m x D_n: sum_k C(m,k) C(n,k) x^k.
IntPolynomial product_g_closed(int m, int n);

// Toric f of the simplex product, degree m + n, three-block palindromic form
// with S_l = sum_{k<=l} C(m,k) C(n,k).
IntPolynomial product_f_closed(int m, int n);

// ---- pyramid-decomposition table -------------------------------------------
//
// The augmented polynomial F(x) := product_f(x+1) + x^{-1} * product_g(x+1)
// decomposes as a table: F(x) = sum_{s,t} entry(m,n,s,t) * x^s with
// -1 <= s <= m+n, 1 <= t <= n+1.  Inner entries are binomial multiples of
// shifted product-g polynomials; the anti-diagonal carries the degenerate
// convention below, and everything outside vanishes.

// Value assigned to the degenerate index pair (-1, t-1): (-x)^(t-1).
IntPolynomial degenerate_g_shifted(int t);

// Table entry: C(m+1, m+n+1-s-t) * C(n+1, t) * G, where G is the shifted
// product-g polynomial of index (m+n-s-t, t-1), or the degenerate value when
// that index hits -1.  Requires 0 <= n <= m, s <= m+n, 1 <= t <= n+1;
// entries with s <= -2 are zero.
IntPolynomial pyramid_matrix_entry(int m, int n, int s, int t);

// Row-sum assembly of the table: the augmented polynomial as a Laurent
// polynomial in x (degrees -1..m+n).
LaurentPolynomial augmented_f_shifted(int m, int n);

// Triple-sum closed form for [x^r] of augmented_f_shifted.
Int augmented_f_coeff(int m, int n, int r);

// [x^r] of product_f(x+1), two ways: via the table (augmented coefficient
// minus the x^{-1}-correction) and directly from the three-block form.
Int product_f_shifted_coeff_matrix(int m, int n, int r);
Int product_f_shifted_coeff_direct(int m, int n, int r);

// ---- binomial convolution identities ---------------------------------------

struct IdentityPair {
  Int lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// Main identity: for all integers q,
//   sum_{k=0}^{n} sum_{i=0}^{n-k} sum_{j=0}^{k} C(m+1, q-k+1) C(n+1, i+k+1)
//     C(i+j, j) C(q-k, i+j) C(k+i, k-j)
//   = sum_{k=0}^{n} C(m, k) C(n, k) C(m+n-k+1, q-k+1).
IdentityPair binomial_convolution_identity(int m, int n, long long q);

// The three nested reductions of the main identity:
//   inner:  sum_j C(i+j, j) C(q-k, i+j) C(k+i, k-j) = C(k+i, k) C(q, k+i)
//   middle: sum_i C(n+1, i+k+1) C(k+i, k) C(q, k+i) = C(q, k) C(q+n-k+1, n-k)
//   outer:  sum_k C(m+1, q-k+1) C(q, k) C(q+n-k+1, n-k) = main RHS.
IdentityPair convolution_inner_identity(long long q, int k, int i);
IdentityPair convolution_middle_identity(int n, long long q, int k);
IdentityPair convolution_outer_identity(int m, int n, long long q);

struct SubIdentityTriple {
  IdentityPair inner, middle, outer;
};

// All three at matching parameters (inner at (q, k, i), middle at (n, q, k),
// outer at (m, n, q)).
SubIdentityTriple convolution_sub_identities(int m, int n, long long q, int k, int i);

// Alternating row sum collapsing to a single monomial:
//   sum_{k=0}^{n} x^{m+n-k} C(n+1, k+1) (-x)^k = x^{m+n}.
LaurentPolynomial telescoping_row_sum(int m, int n);

}  // namespace lpm
