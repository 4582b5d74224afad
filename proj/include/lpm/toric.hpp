#pragma once

#include "lpm/polynomial.hpp"
#include "lpm/poset.hpp"

#include <vector>

namespace lpm {

// Truncated difference transform: for f = sum h_i x^i of degree n, returns
// h_0 + (h_1 - h_0) x + ... + (h_m - h_{m-1}) x^m with m = floor(n/2).
IntPolynomial g_from_f(const IntPolynomial& f);

// Toric f-polynomial of a graded poset with bottom and top:
//   f(single point) = 1, and for top rank n+1
//   f(P) = sum over y != top of g([bottom, y]) * (x-1)^(n - rank(y)).
// Computed by one bottom-up pass memoizing f and g per lower interval.
IntPolynomial toric_f(const GradedPoset& p);

// g_from_f applied to toric_f.
IntPolynomial toric_g(const GradedPoset& p);

// Same recursion evaluated naively, materializing every lower interval as a
// fresh poset; exponential blow-up, only for cross-checking small inputs.
IntPolynomial toric_f_reference(const GradedPoset& p);

// Coefficients h_0..h_n of toric_f (n = top rank - 1).
std::vector<Int> toric_h_vector(const GradedPoset& p);

bool palindromic(const std::vector<Int>& v);

// Classical h-vector transform of a proper f-vector (f_0..f_{d-1}):
//   h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_{j-1},  f_{-1} = 1.
// Returns h_0..h_d.  No symmetry is implied for non-simplicial input.
std::vector<Int> classical_h_vector(const std::vector<long long>& f, int d);

}  // namespace lpm
