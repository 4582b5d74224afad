#include "lpm/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lpm {

void GradedPoset::finish_and_validate() {
  const std::size_t n = rank_.size();
  if (n == 0) throw std::invalid_argument("empty poset");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw std::logic_error("order not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i][j]) continue;
      if (leq_[j][i]) throw std::invalid_argument("order not antisymmetric");
      if (rank_[i] >= rank_[j])
        throw std::invalid_argument("rank not strictly monotone along the order");
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j][k] && !leq_[i][k])
          throw std::invalid_argument("order not transitive");
    }
  }

  bottom_ = top_ = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true, maximal = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && leq_[j][i]) minimal = false;
      if (j != i && leq_[i][j]) maximal = false;
    }
    if (minimal) {
      if (bottom_ >= 0) throw std::invalid_argument("two minimal elements");
      bottom_ = static_cast<int>(i);
    }
    if (maximal) {
      if (top_ >= 0) throw std::invalid_argument("two maximal elements");
      top_ = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[bottom_][i]) throw std::invalid_argument("bottom not below every element");
    if (!leq_[i][top_]) throw std::invalid_argument("top not above every element");
  }
  if (rank_[bottom_] != 0) throw std::invalid_argument("bottom must have rank 0");

  // covers: a < b with nothing strictly between; gradedness = every cover is
  // a single rank step
  hasse_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) covered = false;
      if (covered) {
        if (rank_[b] != rank_[a] + 1)
          throw std::invalid_argument("non-graded: cover from rank " + std::to_string(rank_[a]) +
                                      " to rank " + std::to_string(rank_[b]));
        hasse_.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  std::sort(hasse_.begin(), hasse_.end());
}

GradedPoset GradedPoset::from_face_lattice(const FaceLattice& fl) {
  GradedPoset p;
  const std::size_t n = fl.faces.size();
  p.rank_ = fl.ranks;
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.leq_[i][j] = (fl.faces[i] & fl.faces[j]) == fl.faces[i];
  p.finish_and_validate();
  return p;
}

GradedPoset GradedPoset::from_hasse(const std::vector<int>& ranks,
                                    const std::vector<std::pair<int, int>>& edges) {
  GradedPoset p;
  const std::size_t n = ranks.size();
  p.rank_ = ranks;
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
      throw std::invalid_argument("hasse edge out of range");
    p.leq_[a][b] = true;
  }
  // transitive closure (Floyd-Warshall style)
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k][j]) p.leq_[i][j] = true;
  p.finish_and_validate();
  return p;
}

std::vector<int> GradedPoset::elements_leq(int y) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (leq_[static_cast<int>(i)][y]) out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
  });
  return out;
}

GradedPoset GradedPoset::lower_interval(int y) const {
  auto elems = elements_leq(y);
  const std::size_t n = elems.size();
  GradedPoset p;
  p.rank_.resize(n);
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    p.rank_[i] = rank_[elems[i]];
    for (std::size_t j = 0; j < n; ++j) p.leq_[i][j] = leq_[elems[i]][elems[j]];
  }
  p.finish_and_validate();
  return p;
}

bool is_eulerian(const GradedPoset& p) {
  const std::size_t n = p.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.rank(a) != p.rank(b) ? p.rank(a) < p.rank(b) : a < b;
  });
  std::vector<Int> mu(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    int x = order[xi];
    for (std::size_t yi = xi; yi < n; ++yi) {
      int y = order[yi];
      if (!p.leq(x, y)) continue;
      if (y == x) {
        mu[y] = 1;
        continue;
      }
      Int s = 0;
      for (std::size_t zi = xi; zi < yi; ++zi) {
        int z = order[zi];
        if (p.leq(x, z) && p.leq(z, y)) s += mu[z];
      }
      mu[y] = -s;
      int d = p.rank(y) - p.rank(x);
      if (mu[y] != ((d % 2 == 0) ? Int(1) : Int(-1))) return false;
    }
  }
  return true;
}

}  // namespace lpm
