#include "lpm/toric.hpp"

#include <numeric>
#include <stdexcept>

namespace lpm {

IntPolynomial g_from_f(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("g-transform of the zero polynomial");
  const int n = f.degree();
  const int m = n / 2;
  std::vector<Int> g(m + 1);
  g[0] = f.coeff(0);
  for (int k = 1; k <= m; ++k) g[k] = f.coeff(k) - f.coeff(k - 1);
  return IntPolynomial(std::move(g));
}

namespace {

// f and g of [bottom, y] for every y, in one pass up the ranks.
struct ToricTable {
  std::vector<IntPolynomial> f, g;
};

ToricTable toric_table(const GradedPoset& p) {
  const std::size_t n = p.size();
  ToricTable t;
  t.f.resize(n);
  t.g.resize(n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.rank(a) != p.rank(b) ? p.rank(a) < p.rank(b) : a < b;
  });

  std::vector<IntPolynomial> xm1;  // (x-1)^e
  xm1.push_back(IntPolynomial{Int(1)});
  for (int e = 1; e <= p.top_rank(); ++e) xm1.push_back(xm1.back() * IntPolynomial{Int(-1), Int(1)});

  for (int y : order) {
    if (y == p.bottom()) {
      t.f[y] = IntPolynomial{Int(1)};
      t.g[y] = t.f[y];
      continue;
    }
    const int ny = p.rank(y) - 1;  // degree of f over [bottom, y]
    IntPolynomial f;
    for (std::size_t zi = 0; zi < n; ++zi) {
      int z = static_cast<int>(zi);
      if (z == y || !p.leq(z, y)) continue;
      f += t.g[z] * xm1[ny - p.rank(z)];
    }
    t.f[y] = std::move(f);
    t.g[y] = g_from_f(t.f[y]);
  }
  return t;
}

}  // namespace

IntPolynomial toric_f(const GradedPoset& p) { return toric_table(p).f[p.top()]; }

IntPolynomial toric_g(const GradedPoset& p) { return toric_table(p).g[p.top()]; }

IntPolynomial toric_f_reference(const GradedPoset& p) {
  if (p.size() == 1) return IntPolynomial{Int(1)};
  const int n = p.top_rank() - 1;
  IntPolynomial f;
  for (std::size_t y = 0; y < p.size(); ++y) {
    int yi = static_cast<int>(y);
    if (yi == p.top()) continue;
    if (!p.leq(yi, p.top())) continue;
    IntPolynomial fy = toric_f_reference(p.lower_interval(yi));
    f += g_from_f(fy) * power_of_x_plus(Int(-1), n - p.rank(yi));
  }
  return f;
}

std::vector<Int> toric_h_vector(const GradedPoset& p) {
  IntPolynomial f = toric_f(p);
  const int n = p.top_rank() - 1;
  std::vector<Int> h(n + 1);
  for (int i = 0; i <= n; ++i) h[i] = f.coeff(i);
  return h;
}

bool palindromic(const std::vector<Int>& v) {
  for (std::size_t i = 0; i < v.size() / 2; ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

std::vector<Int> classical_h_vector(const std::vector<long long>& f, int d) {
  if (static_cast<int>(f.size()) != d)
    throw std::invalid_argument("need the proper f-vector f_0..f_{d-1}");
  auto f_at = [&](int j) { return j < 0 ? Int(1) : Int(f[j]); };
  std::vector<Int> h(d + 1);
  for (int i = 0; i <= d; ++i) {
    Int s = 0;
    for (int j = 0; j <= i; ++j) {
      Int term = binomial(d - j, i - j) * f_at(j - 1);
      s += ((i - j) % 2 == 0) ? term : Int(-term);
    }
    h[i] = s;
  }
  return h;
}

}  // namespace lpm
