#include "smallcover/nerve.hpp"

#include <algorithm>
#include <unordered_set>

namespace smallcover {

bool AdjacencyGraph::is_complete() const noexcept {
  const FacetMask full = rows_.size() == kMaxFacets ? ~FacetMask{0}
                                                    : (FacetMask{1} << rows_.size()) - 1;
  return std::all_of(rows_.begin(), rows_.end(), [full](FacetMask r) { return r == full; });
}

AdjacencyGraph adjacency(const SimplePolytope& p) {
  std::vector<FacetMask> rows(static_cast<std::size_t>(p.num_facets()), 0);
  for (FacetMask v : p.vertices()) {
    for (int i : mask_indices(v)) rows[static_cast<std::size_t>(i)] |= v;
  }
  return AdjacencyGraph(std::move(rows));
}

bool is_two_neighborly(const SimplePolytope& p) { return adjacency(p).is_complete(); }

std::vector<FacetMask> minimal_non_faces(const SimplePolytope& p) {
  const int r = p.num_facets();
  const AdjacencyGraph adj = adjacency(p);
  std::vector<FacetMask> out;

  // Faces of the current size k-1, used to grow candidates of size k whose
  // proper subsets are all faces.
  std::vector<FacetMask> layer;
  for (int i = 0; i < r; ++i) layer.push_back(FacetMask{1} << i);

  for (int k = 2; k <= p.dim() + 1 && !layer.empty(); ++k) {
    const std::unordered_set<FacetMask> faces(layer.begin(), layer.end());
    std::vector<FacetMask> next;
    std::vector<FacetMask> found;
    for (FacetMask s : layer) {
      const int top = 63 - std::countl_zero(s);
      // j must be adjacent to every member of s, or {i, j} is already a
      // smaller non-face.
      FacetMask common = p.all_facets();
      for (int i : mask_indices(s)) common &= adj.row(i);
      common &= ~((FacetMask{2} << top) - 1);
      for (int j : mask_indices(common)) {
        const FacetMask cand = s | (FacetMask{1} << j);
        bool all_faces = true;
        for (FacetMask rest = cand; rest != 0 && all_faces; rest &= rest - 1) {
          all_faces = faces.count(cand & ~(rest & -rest)) != 0;
        }
        if (!all_faces) continue;
        (p.is_face(cand) ? next : found).push_back(cand);
      }
    }
    if (k == 2) {
      // Pairs are not reached above when non-adjacent; collect them directly.
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
          if (!adj(i, j)) found.push_back((FacetMask{1} << i) | (FacetMask{1} << j));
        }
      }
    }
    std::sort(found.begin(), found.end());
    out.insert(out.end(), found.begin(), found.end());
    layer = std::move(next);
  }
  return out;
}

bool is_flag(const SimplePolytope& p) {
  const std::vector<FacetMask> mnf = minimal_non_faces(p);
  return std::all_of(mnf.begin(), mnf.end(), [](FacetMask s) { return popcount(s) == 2; });
}

bool is_cube(const SimplePolytope& p) {
  const int n = p.dim();
  const int r = p.num_facets();
  if (r != 2 * n) return false;
  const AdjacencyGraph adj = adjacency(p);
  std::vector<int> partner(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    const FacetMask missing = p.all_facets() & ~adj.row(i);
    if (popcount(missing) != 1) return false;
    partner[static_cast<std::size_t>(i)] = std::countr_zero(missing);
  }
  std::vector<int> lows;
  for (int i = 0; i < r; ++i) {
    if (partner[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])] != i) return false;
    if (i < partner[static_cast<std::size_t>(i)]) lows.push_back(i);
  }
  if (static_cast<int>(lows.size()) != n) return false;
  // Every choice of one facet per pair must meet in a vertex.
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
    FacetMask s = 0;
    for (int j = 0; j < n; ++j) {
      const int f = lows[static_cast<std::size_t>(j)];
      s |= FacetMask{1} << ((choice >> j & 1U) ? partner[static_cast<std::size_t>(f)] : f);
    }
    if (!p.is_face(s)) return false;
  }
  return true;
}

bool is_simplex(const SimplePolytope& p) { return p.num_facets() == p.dim() + 1; }

}  // namespace smallcover
