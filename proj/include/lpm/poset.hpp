#pragma once

#include "lpm/face_lattice.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lpm {

// Finite graded poset with a unique bottom (rank 0) and top.  The order is
// stored as a full reachability matrix; construction validates that every
// cover raises the rank by exactly one, which makes all maximal chains the
// same length.
class GradedPoset {
 public:
  static GradedPoset from_face_lattice(const FaceLattice& fl);

  // Elements 0..n-1 with declared ranks and Hasse edges (lower, upper).
  static GradedPoset from_hasse(const std::vector<int>& ranks,
                                const std::vector<std::pair<int, int>>& edges);

  std::size_t size() const { return rank_.size(); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  int rank(int a) const { return rank_[a]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int top_rank() const { return rank_[top_]; }

  // Elements of [bottom, y] in rank order (y last).
  std::vector<int> elements_leq(int y) const;

  // The interval [bottom, y] as a poset of its own (elements renumbered).
  GradedPoset lower_interval(int y) const;

  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> hasse_;
  int bottom_ = -1;
  int top_ = -1;

  void finish_and_validate();  // derives hasse_, bottom_, top_; throws on defects
};

// Möbius-function test: mu(x, y) == (-1)^(rank(y) - rank(x)) for every x <= y.
bool is_eulerian(const GradedPoset& p);

}  // namespace lpm
