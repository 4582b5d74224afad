#pragma once

#include "lpm/matroid.hpp"
#include "lpm/numbers.hpp"

#include <cstddef>
#include <vector>

namespace lpm {

using Point = std::vector<Rat>;

// 0/1 indicator vector per basis, aligned with m.bases (hence lexicographic).
std::vector<Point> incidence_vertices(const LatticePathMatroid& m);

// Dimension of the affine hull: -1 for no points, 0 for a single point.
int affine_dimension(const std::vector<Point>& points);

// Supporting hyperplane normal·x <= offset; stored with integer entries,
// gcd(normal, offset) = 1, sign fixed by the support side.
struct Hyperplane {
  std::vector<Int> normal;
  Int offset;
  bool operator==(const Hyperplane&) const = default;
};

struct Facet {
  Hyperplane plane;
  std::vector<int> tight;  // vertex indices on the hyperplane, ascending
};

struct FacetLimits {
  int max_dimension = 12;
  std::size_t max_vertices = 64;
};

// Every facet-defining hyperplane of conv(points), found by exhausting
// affinely independent d-subsets of the input (d = affine dimension) inside a
// chart of the affine hull, then lifted back to ambient coordinates with the
// normal taken inside the hull's direction space (which makes it unique).
// Points must be pairwise distinct and in convex position; needs d >= 1.
// Facets are sorted by tight set; exceeding `limits` throws.
std::vector<Facet> enumerate_facets(const std::vector<Point>& points,
                                    const FacetLimits& limits = {});

// Exact rational chart of the affine hull: `basis` rows span the direction
// space, `coords` holds each point's coefficients w.r.t. those rows relative
// to points[0].
struct AffineChart {
  std::vector<std::vector<Rat>> basis;   // d rows of ambient length
  std::vector<std::vector<Rat>> coords;  // one length-d row per point
};

AffineChart affine_chart(const std::vector<Point>& points);

// Rank of the affine hull of a subset of chart rows (used for face ranks).
int affine_dimension_of_rows(const std::vector<std::vector<Rat>>& rows);

}  // namespace lpm
