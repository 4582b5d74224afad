#pragma once

#include "lpm/lattice_path.hpp"
#include "lpm/numbers.hpp"

#include <optional>
#include <vector>

namespace lpm {

// A basis: 1-based ground-set elements, strictly increasing.
using Basis = std::vector<int>;

struct LatticePathMatroid {
  int ground_size = 0;
  int rank = 0;
  std::vector<Basis> bases;  // lexicographically sorted, duplicate-free
};

// Number of monotone paths between the bounding paths, by exact dynamic
// programming over height profiles.
Int count_bases(const PathPair& pair);

// Every path between the bounds, as North-step position sets in lexicographic
// order.  Throws if the basis count exceeds `cap` (count first when in doubt).
LatticePathMatroid enumerate_bases(const PathPair& pair, const Int& cap = Int(1) << 20);

Basis path_to_basis(const LatticePath& path);
LatticePath basis_to_path(const Basis& basis, int ground_size);

struct ExchangeFailure {
  Basis from;     // A
  Basis to;       // B
  int removed;    // x in A \ B admitting no y in B \ A with A - x + y a basis
};

// Basis exchange axiom over every ordered pair of bases; returns the first
// failure, or nullopt when the axiom holds.
std::optional<ExchangeFailure> check_exchange_axiom(const LatticePathMatroid& m);

}  // namespace lpm
