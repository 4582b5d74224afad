#include "lpm/numbers.hpp"

#include <stdexcept>

namespace lpm {

Int binomial(long long n, long long k) {
  if (k < 0) return 0;
  if (n < 0) {
    Int v = binomial(k - n - 1, k);
    return (k % 2 == 0) ? v : Int(-v);
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r holds binomial(n, i + 1) after this step
  }
  return r;
}

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(Int(text));
  Int num(text.substr(0, slash));
  Int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  return Rat(num, den);
}

}  // namespace lpm
