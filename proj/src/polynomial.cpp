#include "lpm/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lpm {

namespace {

// Shared term renderer: writes c * x^e in the conventional compressed form.
void append_term(std::ostringstream& out, const Int& c, int e, bool first) {
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (a != 1 || e == 0) out << a.str();
  if (e != 0) {
    out << "x";
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

IntPolynomial IntPolynomial::monomial(const Int& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Int& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(const Int& a) const {
  // Horner: result <- result * (x + a) + c_k, top coefficient first.
  IntPolynomial xa{a, Int(1)};
  IntPolynomial result;
  for (int k = degree(); k >= 0; --k) {
    result = result * xa;
    result += IntPolynomial{coeffs_[k]};
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(out, coeffs_[k], k, first);
    first = false;
  }
  return out.str();
}

IntPolynomial power_of_x_plus(const Int& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  IntPolynomial xa{a, Int(1)};
  IntPolynomial result{Int(1)};
  for (int i = 0; i < e; ++i) result = result * xa;
  return result;
}

LaurentPolynomial::LaurentPolynomial(int min_degree, std::vector<Int> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPolynomial::LaurentPolynomial(const IntPolynomial& p) : min_degree_(0), coeffs_(p.coeffs()) {
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(const Int& c, int degree) {
  return LaurentPolynomial(degree, {c});
}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    min_degree_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_degree_ = 0;
}

Int LaurentPolynomial::coeff(int k) const {
  int idx = k - min_degree_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_degree_, o.min_degree_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<Int> out(hi - lo + 1, Int(0));
  for (int k = min_degree_; k <= max_degree(); ++k) out[k - lo] = coeffs_[k - min_degree_];
  for (int k = o.min_degree_; k <= o.max_degree(); ++k) out[k - lo] += o.coeffs_[k - o.min_degree_];
  min_degree_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  LaurentPolynomial neg = o;
  for (auto& v : neg.coeffs_) v = -v;
  return *this += neg;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.min_degree_ + b.min_degree_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::times_x_power(int k) const {
  if (is_zero()) return {};
  return LaurentPolynomial(min_degree_ + k, coeffs_);
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = min_degree(); k <= max_degree(); ++k) {
    Int c = coeff(k);
    if (c == 0) continue;
    append_term(out, c, k, first);
    first = false;
  }
  return out.str();
}

}  // namespace lpm
