#pragma once

#include "lpm/geometry.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace lpm {

// Face lattice of a polytope with at most 64 vertices.  Faces are vertex
// subsets (bitmasks over vertex indices), produced as the intersection
// closure of the facet vertex sets plus the empty face and the whole
// polytope; sorted by (rank, mask).  Ranks: empty face 0, vertices 1, the
// whole polytope dim+1 (affine dimension of the face, plus one).
struct FaceLattice {
  int dim = 0;
  std::size_t vertex_count = 0;
  std::vector<std::uint64_t> faces;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> hasse;  // cover pairs (lower, upper), sorted
};

// Throws if more than `max_faces` faces arise, if some input point fails to
// appear as a vertex (rank-1 face), or if covers skip a rank (non-graded
// closure would mean the facet list was not a polytope's).
FaceLattice build_face_lattice(const std::vector<Point>& points,
                               const std::vector<Facet>& facets,
                               std::size_t max_faces = 5000);

// Face counts by dimension: (f_0, ..., f_dim), top face included.
std::vector<long long> f_vector(const FaceLattice& fl);

// Alternating sum of proper face counts equals 1 - (-1)^dim, equivalently the
// full sum including the top face is 1.
bool euler_relation_holds(const FaceLattice& fl);

// Every rank-2 interval contains exactly two intermediate elements.
bool diamond_property_holds(const FaceLattice& fl);

struct EdgeMetrics {
  std::set<Rat> edge_sq_lengths;  // distinct squared edge lengths
  int graph_diameter = 0;         // eccentricity max over the 1-skeleton
  Rat max_sq_distance = 0;        // over all vertex pairs
};

// Exact Euclidean data in the ambient coordinates.
EdgeMetrics edge_metrics(const std::vector<Point>& points, const FaceLattice& fl);

}  // namespace lpm
