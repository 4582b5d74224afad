#include "lpm/hook_formulas.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpm {

namespace {

void require_hook_params(int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("hook parameters must be >= 1");
}

void require_product_params(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("simplex product parameters must be >= 0");
}

long long to_ll(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

// Three-block palindromic assembly shared by the product and hook forms:
// S_0..S_{n-1}, then S_n constant through degree m, then mirrored; built with
// the diagonal partial sums of C(m,.) C(n,.).  Degree m + n.
IntPolynomial three_block(int m, int n) {
  if (n > m) std::swap(m, n);
  std::vector<Int> s(n + 1);
  Int acc = 0;
  for (int k = 0; k <= n; ++k) {
    acc += binomial(m, k) * binomial(n, k);
    s[k] = acc;
  }
  std::vector<Int> c(m + n + 1);
  for (int k = 0; k <= m + n; ++k) {
    int idx = std::min(k, std::min(m + n - k, n));
    c[k] = s[idx];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

Int hook_base_face_count(int alpha, int beta, int i) {
  require_hook_params(alpha, beta);
  if (i < -1) throw std::invalid_argument("face dimension must be >= -1");
  if (i == -1) return 1;
  Int r = 0;
  for (int k = 1; k <= i + 1; ++k) r += binomial(alpha, k) * binomial(beta, i + 2 - k);
  return r;
}

std::vector<long long> hook_f_vector(int alpha, int beta) {
  require_hook_params(alpha, beta);
  std::vector<long long> f(alpha + beta);
  Int prev = 1;  // r_{-1}
  for (int i = 0; i <= alpha + beta - 1; ++i) {
    Int ri = hook_base_face_count(alpha, beta, i);
    f[i] = to_ll(ri + prev, "f-vector entry");
    prev = ri;
  }
  return f;
}

Int hook_s(int alpha, int beta, int ell) {
  require_hook_params(alpha, beta);
  Int s = 0;
  for (int k = 0; k <= ell; ++k) s += binomial(alpha - 1, k) * binomial(beta - 1, k);
  return s;
}

IntPolynomial product_g_closed(int m, int n) {
  require_product_params(m, n);
  std::vector<Int> c(std::min(m, n) + 1);
  for (int k = 0; k <= std::min(m, n); ++k) c[k] = binomial(m, k) * binomial(n, k);
  return IntPolynomial(std::move(c));
}

IntPolynomial product_f_closed(int m, int n) {
  require_product_params(m, n);
  return three_block(m, n);
}

IntPolynomial hook_g_closed(int alpha, int beta) {
  require_hook_params(alpha, beta);
  return product_g_closed(alpha - 1, beta - 1);
}

IntPolynomial hook_f_closed(int alpha, int beta) {
  require_hook_params(alpha, beta);
  // pyramid step: g of the base plus x times f of the base
  return product_g_closed(alpha - 1, beta - 1) +
         IntPolynomial::monomial(Int(1), 1) * product_f_closed(alpha - 1, beta - 1);
}

IntPolynomial degenerate_g_shifted(int t) {
  if (t < 1) throw std::invalid_argument("column index must be >= 1");
  return IntPolynomial::monomial((t - 1) % 2 == 0 ? Int(1) : Int(-1), t - 1);
}

IntPolynomial pyramid_matrix_entry(int m, int n, int s, int t) {
  require_product_params(m, n);
  if (n > m) throw std::invalid_argument("table requires n <= m");
  if (t < 1 || t > n + 1)
    throw std::invalid_argument("column index out of range 1.." + std::to_string(n + 1));
  if (s > m + n) throw std::invalid_argument("row index exceeds " + std::to_string(m + n));
  const int a = m + n + 1 - s - t;
  Int c = binomial(m + 1, a) * binomial(n + 1, t);
  if (c == 0) return {};
  const int p = a - 1;  // index of the shifted g factor
  IntPolynomial g;
  if (p == -1) {
    g = degenerate_g_shifted(t);
  } else {
    g = product_g_closed(p, t - 1).shifted(Int(1));
  }
  return g * c;
}

LaurentPolynomial augmented_f_shifted(int m, int n) {
  require_product_params(m, n);
  if (n > m) throw std::invalid_argument("table requires n <= m");
  LaurentPolynomial total;
  for (int s = -1; s <= m + n; ++s)
    for (int t = 1; t <= n + 1; ++t)
      total += LaurentPolynomial(pyramid_matrix_entry(m, n, s, t)).times_x_power(s);
  return total;
}

Int augmented_f_coeff(int m, int n, int r) {
  require_product_params(m, n);
  Int total = 0;
  for (int k = 0; k <= n; ++k) {
    Int outer = binomial(m + 1, m + n - r - k);
    if (outer == 0) continue;
    for (int i = 0; i <= n - k; ++i) {
      Int mid = binomial(n + 1, i + k + 1);
      if (mid == 0) continue;
      Int inner = 0;
      for (int j = 0; j <= k; ++j)
        inner += binomial(i + j, i) * binomial(m + n - r - k - 1, i + j) * binomial(i + k, i + j);
      total += outer * mid * inner;
    }
  }
  return total;
}

Int product_f_shifted_coeff_matrix(int m, int n, int r) {
  Int total = augmented_f_coeff(m, n, r);
  for (int k = 0; k <= n; ++k)
    total -= binomial(m, k) * binomial(n, k) * binomial(k, r + 1);
  return total;
}

Int product_f_shifted_coeff_direct(int m, int n, int r) {
  require_product_params(m, n);
  Int total = 0;
  for (int k = 0; k <= n; ++k)
    total += binomial(m, k) * binomial(n, k) *
             (binomial(m + n - k + 1, r + 1) - binomial(k, r + 1));
  return total;
}

IdentityPair binomial_convolution_identity(int m, int n, long long q) {
  Int lhs = 0;
  for (int k = 0; k <= n; ++k) {
    Int a = binomial(m + 1, q - k + 1);
    if (a == 0) continue;
    for (int i = 0; i <= n - k; ++i) {
      Int b = binomial(n + 1, i + k + 1);
      if (b == 0) continue;
      for (int j = 0; j <= k; ++j)
        lhs += a * b * binomial(i + j, j) * binomial(q - k, i + j) * binomial(k + i, k - j);
    }
  }
  Int rhs = 0;
  for (int k = 0; k <= n; ++k)
    rhs += binomial(m, k) * binomial(n, k) * binomial(m + n - k + 1, q - k + 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair convolution_inner_identity(long long q, int k, int i) {
  Int lhs = 0;
  for (int j = 0; j <= k; ++j)
    lhs += binomial(i + j, j) * binomial(q - k, i + j) * binomial(k + i, k - j);
  Int rhs = binomial(k + i, k) * binomial(q, k + i);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair convolution_middle_identity(int n, long long q, int k) {
  Int lhs = 0;
  for (int i = 0; i <= n - k; ++i)
    lhs += binomial(n + 1, i + k + 1) * binomial(k + i, k) * binomial(q, k + i);
  Int rhs = binomial(q, k) * binomial(q + n - k + 1, n - k);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair convolution_outer_identity(int m, int n, long long q) {
  Int lhs = 0;
  for (int k = 0; k <= n; ++k)
    lhs += binomial(m + 1, q - k + 1) * binomial(q, k) * binomial(q + n - k + 1, n - k);
  Int rhs = 0;
  for (int k = 0; k <= n; ++k)
    rhs += binomial(m, k) * binomial(n, k) * binomial(m + n - k + 1, q - k + 1);
  return {std::move(lhs), std::move(rhs)};
}

SubIdentityTriple convolution_sub_identities(int m, int n, long long q, int k, int i) {
  return {convolution_inner_identity(q, k, i), convolution_middle_identity(n, q, k),
          convolution_outer_identity(m, n, q)};
}

LaurentPolynomial telescoping_row_sum(int m, int n) {
  require_product_params(m, n);
  LaurentPolynomial total;
  for (int k = 0; k <= n; ++k) {
    auto neg_x_pow = LaurentPolynomial::monomial(k % 2 == 0 ? Int(1) : Int(-1), k);
    total += LaurentPolynomial::monomial(binomial(n + 1, k + 1), m + n - k) * neg_x_pow;
  }
  return total;
}

}  // namespace lpm
