#include "lpm/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpm {

namespace {

// In-place reduction to reduced row echelon form; returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

// Solves the square SPD system g * v = rhs by elimination (exact).
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> g, std::vector<Rat> rhs) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) g[i].push_back(rhs[i]);
  auto pivots = rref(g);
  if (pivots.size() != n)
    throw std::logic_error("singular system in hyperplane lift");
  std::vector<Rat> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g[i][n];
  return v;
}

std::uint64_t bit(int i) { return std::uint64_t(1) << i; }

}  // namespace

std::vector<Point> incidence_vertices(const LatticePathMatroid& m) {
  std::vector<Point> pts;
  pts.reserve(m.bases.size());
  for (const auto& b : m.bases) {
    Point p(m.ground_size, Rat(0));
    for (int e : b) p[e - 1] = 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

AffineChart affine_chart(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t n = points[0].size();
  std::vector<std::vector<Rat>> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  auto pivots = rref(diffs);
  AffineChart chart;
  chart.basis = std::move(diffs);
  // Rows are in reduced echelon form, so the coefficient of row i in any
  // direction-space vector is just its entry at pivot column i.
  chart.coords.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rat> y(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) y[i] = p[pivots[i]] - points[0][pivots[i]];
    chart.coords.push_back(std::move(y));
  }
  return chart;
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  AffineChart c = affine_chart(points);
  return static_cast<int>(c.basis.size());
}

int affine_dimension_of_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return -1;
  std::vector<std::vector<Rat>> diffs;
  diffs.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<Rat> d(rows[0].size());
    for (std::size_t j = 0; j < rows[0].size(); ++j) d[j] = rows[i][j] - rows[0][j];
    diffs.push_back(std::move(d));
  }
  rref(diffs);
  return static_cast<int>(diffs.size());
}

std::vector<Facet> enumerate_facets(const std::vector<Point>& points, const FacetLimits& limits) {
  const std::size_t nv = points.size();
  if (nv > limits.max_vertices)
    throw std::runtime_error("vertex cap exceeded: " + std::to_string(nv) + " > " +
                             std::to_string(limits.max_vertices));
  if (nv > 64) throw std::runtime_error("facet search supports at most 64 vertices");
  AffineChart chart = affine_chart(points);
  const int d = static_cast<int>(chart.basis.size());
  if (d < 1)
    throw std::invalid_argument("facet enumeration needs at least 2 affinely independent points");
  if (d > limits.max_dimension)
    throw std::runtime_error("dimension cap exceeded: " + std::to_string(d) + " > " +
                             std::to_string(limits.max_dimension));

  // chart hyperplane per tight set: u . y <= c0
  std::map<std::uint64_t, std::pair<std::vector<Rat>, Rat>> found;

  std::vector<int> subset(d);
  std::iota(subset.begin(), subset.end(), 0);
  const auto& y = chart.coords;
  while (true) {
    // spanning hyperplane of the subset, if affinely independent
    std::vector<std::vector<Rat>> rows;
    rows.reserve(d - 1);
    for (int i = 1; i < d; ++i) {
      std::vector<Rat> r(d);
      for (int j = 0; j < d; ++j) r[j] = y[subset[i]][j] - y[subset[0]][j];
      rows.push_back(std::move(r));
    }
    auto pivots = rref(rows);
    if (static_cast<int>(pivots.size()) == d - 1) {
      // one free column; the nullspace vector reads off the reduced rows
      std::vector<bool> is_pivot(d, false);
      for (int c : pivots) is_pivot[c] = true;
      int free_col = 0;
      while (is_pivot[free_col]) ++free_col;
      std::vector<Rat> u(d, Rat(0));
      u[free_col] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = -rows[i][free_col];

      Rat c0 = 0;
      for (int j = 0; j < d; ++j) c0 += u[j] * y[subset[0]][j];
      bool above = false, below = false;
      std::uint64_t tight = 0;
      for (std::size_t p = 0; p < nv; ++p) {
        Rat dot = 0;
        for (int j = 0; j < d; ++j) dot += u[j] * y[p][j];
        if (dot == c0)
          tight |= bit(static_cast<int>(p));
        else if (dot > c0)
          above = true;
        else
          below = true;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {  // flip so the polytope sits on the <= side
          for (auto& v : u) v = -v;
          c0 = -c0;
        }
        found.emplace(tight, std::make_pair(std::move(u), std::move(c0)));
      }
    }
    // next d-combination of {0..nv-1}
    int i = d - 1;
    while (i >= 0 && subset[i] == static_cast<int>(nv) - d + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }

  // Gram matrix of the chart basis, for lifting normals into the direction
  // space of the hull (the unique ambient representative).
  std::vector<std::vector<Rat>> gram(d, std::vector<Rat>(d));
  const std::size_t amb = points[0].size();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < amb; ++k) s += chart.basis[i][k] * chart.basis[j][k];
      gram[i][j] = gram[j][i] = s;
    }

  std::vector<Facet> facets;
  facets.reserve(found.size());
  for (const auto& [tight, plane] : found) {
    auto v = solve_square(gram, plane.first);
    std::vector<Rat> h(amb, Rat(0));
    for (int j = 0; j < d; ++j)
      for (std::size_t k = 0; k < amb; ++k) h[k] += v[j] * chart.basis[j][k];
    Rat offset = plane.second;
    for (std::size_t k = 0; k < amb; ++k) offset += h[k] * points[0][k];

    // clear denominators, divide by the common gcd
    Int lcm = 1;
    for (const auto& r : h) lcm = boost::multiprecision::lcm(lcm, denominator(r));
    lcm = boost::multiprecision::lcm(lcm, denominator(offset));
    Hyperplane hp;
    hp.normal.resize(amb);
    Int g = 0;
    for (std::size_t k = 0; k < amb; ++k) {
      hp.normal[k] = numerator(h[k]) * (lcm / denominator(h[k]));
      g = boost::multiprecision::gcd(g, hp.normal[k]);
    }
    hp.offset = numerator(offset) * (lcm / denominator(offset));
    g = boost::multiprecision::gcd(g, hp.offset);
    if (g > 1) {
      for (auto& c : hp.normal) c /= g;
      hp.offset /= g;
    }

    Facet f;
    f.plane = std::move(hp);
    for (std::size_t p = 0; p < nv; ++p)
      if (tight & bit(static_cast<int>(p))) f.tight.push_back(static_cast<int>(p));
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.tight < b.tight; });
  return facets;
}

}  // namespace lpm
