#pragma once

#include "lpm/numbers.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace lpm {

// Dense polynomial over Int, coefficients stored from degree 0 upward and
// kept normalized (no trailing zeros).  The zero polynomial has an empty
// coefficient vector and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<Int> coeffs);

  static IntPolynomial monomial(const Int& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Int& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Int& c) { return a *= c; }

  // p(x + a), exact composition.
  IntPolynomial shifted(const Int& a) const;

  bool operator==(const IntPolynomial& o) const = default;

  // Human form, e.g. "1 + 2x + 2x^2"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  std::vector<Int> coeffs_;
  void normalize();
};

// (x + a)^e for e >= 0.
IntPolynomial power_of_x_plus(const Int& a, int e);

// Laurent polynomial: dense coefficients starting at min_degree, trimmed at
// both ends.  The zero polynomial has empty coefficients and min_degree 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int min_degree, std::vector<Int> coeffs);
  LaurentPolynomial(const IntPolynomial& p);  // embeds an ordinary polynomial

  static LaurentPolynomial monomial(const Int& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // p * x^k (k may be negative).
  LaurentPolynomial times_x_power(int k) const;

  bool operator==(const LaurentPolynomial& o) const = default;

  std::string to_string() const;  // e.g. "2x^-1 + 5 + 4x + x^2"

 private:
  int min_degree_ = 0;
  std::vector<Int> coeffs_;
  void normalize();
};

}  // namespace lpm
