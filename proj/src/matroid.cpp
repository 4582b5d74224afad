#include "lpm/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lpm {

Int count_bases(const PathPair& pair) {
  const auto lo = pair.lower.height_profile();
  const auto hi = pair.upper.height_profile();
  const int len = pair.lower.length();
  // ways[h] = number of admissible prefixes of the current length at height h.
  std::vector<Int> ways(lo.back() + 1, Int(0));
  ways[0] = 1;
  for (int i = 1; i <= len; ++i) {
    std::vector<Int> next(ways.size(), Int(0));
    for (int h = lo[i]; h <= hi[i]; ++h) {
      Int v = ways[h];  // East step keeps the height
      if (h > 0) v += ways[h - 1];
      next[h] = v;
    }
    ways = std::move(next);
  }
  return ways[lo.back()];
}

LatticePathMatroid enumerate_bases(const PathPair& pair, const Int& cap) {
  Int total = count_bases(pair);
  if (total > cap)
    throw std::runtime_error("basis enumeration cap exceeded: " + total.str() + " > " +
                             cap.str() + " (count first via count_bases)");
  const auto lo = pair.lower.height_profile();
  const auto hi = pair.upper.height_profile();
  const int len = pair.lower.length();
  const int rank = lo.back();

  LatticePathMatroid m;
  m.ground_size = len;
  m.rank = rank;

  // Depth-first over the next North position; choosing positions in
  // increasing order emits the position sets lexicographically.  With k
  // Norths placed, the last at `pos`, a run of Easts keeps the height at k,
  // which is admissible up to prefix p-1 iff lo[p-1] <= k (the upper bound
  // holds throughout since hi is nondecreasing and k <= hi[pos]); stepping
  // North at p needs k+1 <= hi[p].  Once k == rank the suffix of Easts is
  // admissible because lo tops out at rank.
  Basis current;
  current.reserve(rank);
  auto dfs = [&](auto&& self, int pos, int k) -> void {
    if (k == rank) {
      m.bases.push_back(current);
      return;
    }
    for (int p = pos + 1; p <= len; ++p) {
      if (lo[p - 1] > k) break;  // lower bound overtakes; larger p only worse
      if (k + 1 <= hi[p]) {
        current.push_back(p);
        self(self, p, k + 1);
        current.pop_back();
      }
    }
  };
  dfs(dfs, 0, 0);

  if (Int(m.bases.size()) != total)
    throw std::logic_error("enumeration disagrees with count: " +
                           std::to_string(m.bases.size()) + " vs " + total.str());
  return m;
}

Basis path_to_basis(const LatticePath& path) {
  Basis b;
  for (int i = 0; i < path.length(); ++i)
    if (path.steps[i] == Step::North) b.push_back(i + 1);
  return b;
}

LatticePath basis_to_path(const Basis& basis, int ground_size) {
  LatticePath p;
  p.steps.assign(ground_size, Step::East);
  for (int e : basis) {
    if (e < 1 || e > ground_size)
      throw std::invalid_argument("basis element " + std::to_string(e) +
                                  " outside ground set 1.." + std::to_string(ground_size));
    if (p.steps[e - 1] == Step::North)
      throw std::invalid_argument("duplicate basis element " + std::to_string(e));
    p.steps[e - 1] = Step::North;
  }
  return p;
}

std::optional<ExchangeFailure> check_exchange_axiom(const LatticePathMatroid& m) {
  std::set<Basis> basis_set(m.bases.begin(), m.bases.end());
  for (const auto& a : m.bases) {
    for (const auto& b : m.bases) {
      if (a == b) continue;
      std::vector<int> a_minus_b, b_minus_a;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_minus_b));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_minus_a));
      for (int x : a_minus_b) {
        bool found = false;
        for (int y : b_minus_a) {
          Basis swapped;
          swapped.reserve(a.size());
          for (int e : a)
            if (e != x) swapped.push_back(e);
          swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), y), y);
          if (basis_set.count(swapped)) { found = true; break; }
        }
        if (!found) return ExchangeFailure{a, b, x};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lpm
