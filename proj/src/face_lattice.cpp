#include "lpm/face_lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace lpm {

namespace {

int face_rank(const AffineChart& chart, std::uint64_t mask) {
  if (mask == 0) return 0;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < chart.coords.size(); ++i)
    if (mask & (std::uint64_t(1) << i)) rows.push_back(chart.coords[i]);
  return affine_dimension_of_rows(rows) + 1;
}

}  // namespace

FaceLattice build_face_lattice(const std::vector<Point>& points,
                               const std::vector<Facet>& facets,
                               std::size_t max_faces) {
  const std::size_t nv = points.size();
  if (nv == 0) throw std::invalid_argument("no points");
  if (nv > 64) throw std::invalid_argument("face lattice supports at most 64 vertices");
  const std::uint64_t full = (nv == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << nv) - 1);

  std::vector<std::uint64_t> facet_masks;
  facet_masks.reserve(facets.size());
  for (const auto& f : facets) {
    std::uint64_t m = 0;
    for (int i : f.tight) m |= std::uint64_t(1) << i;
    facet_masks.push_back(m);
  }

  // Intersection closure: every proper nonempty face is an intersection of
  // the facets containing it, so closing the facet set under pairwise
  // intersection reaches every face.
  std::set<std::uint64_t> faces{full, 0};
  std::deque<std::uint64_t> queue{full};
  while (!queue.empty()) {
    std::uint64_t m = queue.front();
    queue.pop_front();
    for (std::uint64_t fm : facet_masks) {
      std::uint64_t inter = m & fm;
      if (faces.insert(inter).second) {
        if (faces.size() > max_faces)
          throw std::runtime_error("face cap exceeded: more than " + std::to_string(max_faces) +
                                   " faces");
        queue.push_back(inter);
      }
    }
  }

  AffineChart chart = affine_chart(points);
  FaceLattice fl;
  fl.vertex_count = nv;
  fl.dim = static_cast<int>(chart.basis.size());

  std::vector<std::pair<int, std::uint64_t>> ordered;
  ordered.reserve(faces.size());
  for (std::uint64_t m : faces) ordered.emplace_back(face_rank(chart, m), m);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [r, m] : ordered) {
    fl.ranks.push_back(r);
    fl.faces.push_back(m);
  }

  // Sanity: every point is a vertex of the hull (a rank-1 face).
  std::size_t rank1 = 0;
  for (std::size_t i = 0; i < fl.faces.size(); ++i)
    if (fl.ranks[i] == 1) {
      if (std::popcount(fl.faces[i]) != 1)
        throw std::logic_error("rank-1 face with several vertices; input not in convex position");
      ++rank1;
    }
  if (rank1 != nv)
    throw std::logic_error("some input point is not a vertex of the hull (" +
                           std::to_string(rank1) + " of " + std::to_string(nv) + ")");
  if (fl.ranks.back() != fl.dim + 1 || std::count(fl.ranks.begin(), fl.ranks.end(), fl.dim + 1) != 1)
    throw std::logic_error("top face must be the unique rank dim+1 element");

  // Covers = inclusion-maximal pairs; gradedness demands each spans one rank.
  const std::size_t nf = fl.faces.size();
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = 0; b < nf; ++b) {
      if (a == b) continue;
      std::uint64_t fa = fl.faces[a], fb = fl.faces[b];
      if ((fa & fb) != fa || fa == fb) continue;  // need a strictly below b
      if (fl.ranks[b] == fl.ranks[a] + 1) {
        fl.hasse.emplace_back(static_cast<int>(a), static_cast<int>(b));
      } else if (fl.ranks[b] > fl.ranks[a] + 1) {
        bool intermediate = false;
        for (std::size_t c = 0; c < nf && !intermediate; ++c) {
          if (c == a || c == b) continue;
          std::uint64_t fc = fl.faces[c];
          if ((fa & fc) == fa && (fc & fb) == fc && fa != fc && fc != fb) intermediate = true;
        }
        if (!intermediate)
          throw std::logic_error("cover skips a rank: lattice not graded");
      } else {
        throw std::logic_error("inclusion does not respect ranks");
      }
    }
  }
  std::sort(fl.hasse.begin(), fl.hasse.end());
  return fl;
}

std::vector<long long> f_vector(const FaceLattice& fl) {
  std::vector<long long> f(fl.dim + 1, 0);
  for (int r : fl.ranks)
    if (r >= 1) ++f[r - 1];
  return f;
}

bool euler_relation_holds(const FaceLattice& fl) {
  auto f = f_vector(fl);
  long long sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0) ? f[i] : -f[i];
  return sum == 1;
}

bool diamond_property_holds(const FaceLattice& fl) {
  const std::size_t nf = fl.faces.size();
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = 0; b < nf; ++b) {
      if (fl.ranks[b] != fl.ranks[a] + 2) continue;
      std::uint64_t fa = fl.faces[a], fb = fl.faces[b];
      if ((fa & fb) != fa || fa == fb) continue;
      int middles = 0;
      for (std::size_t c = 0; c < nf; ++c) {
        if (fl.ranks[c] != fl.ranks[a] + 1) continue;
        std::uint64_t fc = fl.faces[c];
        if ((fa & fc) == fa && (fc & fb) == fc) ++middles;
      }
      if (middles != 2) return false;
    }
  }
  return true;
}

EdgeMetrics edge_metrics(const std::vector<Point>& points, const FaceLattice& fl) {
  EdgeMetrics em;
  const std::size_t nv = points.size();
  auto sq_dist = [&](std::size_t a, std::size_t b) {
    Rat s = 0;
    for (std::size_t k = 0; k < points[a].size(); ++k) {
      Rat d = points[a][k] - points[b][k];
      s += d * d;
    }
    return s;
  };

  std::vector<std::vector<int>> adj(nv);
  for (std::size_t i = 0; i < fl.faces.size(); ++i) {
    if (fl.ranks[i] != 2) continue;
    std::uint64_t m = fl.faces[i];
    if (std::popcount(m) != 2) throw std::logic_error("edge face with vertex count != 2");
    int a = std::countr_zero(m);
    int b = std::countr_zero(m & (m - 1));
    adj[a].push_back(b);
    adj[b].push_back(a);
    em.edge_sq_lengths.insert(sq_dist(a, b));
  }

  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b) em.max_sq_distance = std::max(em.max_sq_distance, sq_dist(a, b));

  // BFS eccentricities over the 1-skeleton
  for (std::size_t s = 0; s < nv; ++s) {
    std::vector<int> dist(nv, -1);
    dist[s] = 0;
    std::deque<int> q{static_cast<int>(s)};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
      if (dist[v] < 0) throw std::logic_error("1-skeleton is disconnected");
      em.graph_diameter = std::max(em.graph_diameter, dist[v]);
    }
  }
  return em;
}

}  // namespace lpm
