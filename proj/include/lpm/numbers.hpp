#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lpm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient extended to every integer upper index:
//   k < 0                -> 0
//   n >= 0 and k > n     -> 0
//   n < 0                -> (-1)^k * binomial(k - n - 1, k)
// so e.g. binomial(-1, k) = (-1)^k.  Exact at every size.
Int binomial(long long n, long long k);

// Canonical rational text: "p/q" with q > 0 and gcd(p, q) = 1; the
// denominator is kept even when it is 1, so rendering is unambiguous.
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a bare integer "p".
Rat rat_from_string(const std::string& text);

}  // namespace lpm
