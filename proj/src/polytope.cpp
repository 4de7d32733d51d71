#include "smallcover/polytope.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "smallcover/error.hpp"

namespace smallcover {

std::vector<int> mask_indices(FacetMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

FacetMask mask_of(const std::vector<int>& indices) {
  FacetMask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxFacets) {
      throw Error(ErrorCode::BadIndex, "facet index " + std::to_string(i) + " out of range");
    }
    m |= FacetMask{1} << i;
  }
  return m;
}

namespace {

std::string mask_string(FacetMask m) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

// Calls fn(sub) for every submask of `m` with exactly k bits, in increasing
// numeric order.
template <typename Fn>
void for_each_k_submask(FacetMask m, int k, Fn&& fn) {
  const std::vector<int> idx = mask_indices(m);
  const int size = static_cast<int>(idx.size());
  if (k < 0 || k > size) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    FacetMask sub = 0;
    for (int i : pick) sub |= FacetMask{1} << idx[static_cast<std::size_t>(i)];
    fn(sub);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == size - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

FacetMask SimplePolytope::all_facets() const noexcept {
  return num_facets_ == kMaxFacets ? ~FacetMask{0} : (FacetMask{1} << num_facets_) - 1;
}

bool SimplePolytope::is_face(FacetMask s) const noexcept {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [s](FacetMask v) { return (v & s) == s; });
}

int SimplePolytope::vertices_containing(FacetMask s) const noexcept {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [s](FacetMask v) { return (v & s) == s; }));
}

SimplePolytope validate(int dim, std::vector<FacetMask> vertices, int num_facets) {
  if (dim < 1) throw Error(ErrorCode::TooSmall, "dimension must be at least 1");
  FacetMask used = 0;
  for (FacetMask v : vertices) used |= v;
  const int inferred = used == 0 ? 0 : kMaxFacets - std::countl_zero(used);
  if (num_facets < 0) num_facets = inferred;
  if (num_facets > kMaxFacets) {
    throw Error(ErrorCode::TooLarge, "at most 64 facets are supported");
  }
  if (inferred > num_facets) {
    throw Error(ErrorCode::BadIndex, "facet index " + std::to_string(inferred - 1) +
                                         " exceeds num_facets " + std::to_string(num_facets));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (popcount(vertices[i]) != dim) {
      throw Error(ErrorCode::NotSimple, "vertex " + std::to_string(i) + " " +
                                            mask_string(vertices[i]) + " lies on " +
                                            std::to_string(popcount(vertices[i])) +
                                            " facets, expected " + std::to_string(dim));
    }
  }
  if (num_facets < dim + 1 || static_cast<int>(vertices.size()) < dim + 1) {
    throw Error(ErrorCode::TooSmall, "need at least n+1 facets and n+1 vertices");
  }
  for (int f = 0; f < num_facets; ++f) {
    if ((used >> f & 1U) == 0) {
      throw Error(ErrorCode::DanglingFacet, "facet " + std::to_string(f) + " has no vertex");
    }
  }
  std::unordered_map<FacetMask, int> ridges;
  for (FacetMask v : vertices) {
    for (FacetMask rest = v; rest != 0; rest &= rest - 1) {
      ++ridges[v & ~(rest & -rest)];
    }
  }
  for (FacetMask v : vertices) {
    for (FacetMask rest = v; rest != 0; rest &= rest - 1) {
      const FacetMask ridge = v & ~(rest & -rest);
      const int count = ridges[ridge];
      if (count != 2) {
        throw Error(ErrorCode::BadRidge, "facet set " + mask_string(ridge) + " lies in " +
                                             std::to_string(count) + " vertices, expected 2");
      }
    }
  }
  return SimplePolytope(dim, num_facets, std::move(vertices));
}

SimplePolytope validate(int dim, const std::vector<std::vector<int>>& vertices, int num_facets) {
  std::vector<FacetMask> masks;
  masks.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const FacetMask m = mask_of(vertices[i]);
    if (popcount(m) != static_cast<int>(vertices[i].size())) {
      throw Error(ErrorCode::NotSimple, "vertex " + std::to_string(i) + " repeats a facet");
    }
    masks.push_back(m);
  }
  return validate(dim, std::move(masks), num_facets);
}

SimplePolytope simplex(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "simplex dimension must be >= 1");
  if (n + 1 > kMaxFacets) throw Error(ErrorCode::BadParameter, "simplex too large");
  std::vector<FacetMask> verts;
  const FacetMask all = (FacetMask{1} << (n + 1)) - 1;
  for (int i = 0; i <= n; ++i) verts.push_back(all & ~(FacetMask{1} << i));
  return validate(n, std::move(verts), n + 1);
}

SimplePolytope cube(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "cube dimension must be >= 1");
  if (2 * n > kMaxFacets || n > 20) throw Error(ErrorCode::BadParameter, "cube too large");
  std::vector<FacetMask> verts;
  for (std::uint32_t choice = 0; choice < (1U << n); ++choice) {
    FacetMask v = 0;
    for (int j = 0; j < n; ++j) v |= FacetMask{1} << (2 * j + static_cast<int>(choice >> j & 1U));
    verts.push_back(v);
  }
  return validate(n, std::move(verts), 2 * n);
}

SimplePolytope polygon(int m) {
  if (m < 3 || m > kMaxFacets) throw Error(ErrorCode::BadParameter, "polygon needs 3 <= m <= 64");
  std::vector<FacetMask> verts;
  for (int i = 0; i < m; ++i) {
    verts.push_back((FacetMask{1} << i) | (FacetMask{1} << ((i + 1) % m)));
  }
  return validate(2, std::move(verts), m);
}

SimplePolytope dual_cyclic(int k, int n) {
  if (n < 2 || k <= n || k > kMaxFacets) {
    throw Error(ErrorCode::BadParameter, "dual_cyclic needs k > n >= 2 and k <= 64");
  }
  std::vector<FacetMask> verts;
  const FacetMask all = k == kMaxFacets ? ~FacetMask{0} : (FacetMask{1} << k) - 1;
  for_each_k_submask(all, n, [&](FacetMask s) {
    // Gale: any two points outside s are separated by an even number of
    // points of s.
    const std::vector<int> outside = mask_indices(all & ~s);
    for (std::size_t a = 0; a + 1 < outside.size(); ++a) {
      const int lo = outside[a];
      const int hi = outside[a + 1];
      const FacetMask between = ((FacetMask{1} << hi) - 1) & ~((FacetMask{1} << (lo + 1)) - 1);
      if (popcount(s & between) % 2 != 0) return;
    }
    verts.push_back(s);
  });
  return validate(n, std::move(verts), k);
}

SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
  const int shift = p.num_facets();
  if (shift + q.num_facets() > kMaxFacets) {
    throw Error(ErrorCode::BadParameter, "product has more than 64 facets");
  }
  std::vector<FacetMask> verts;
  verts.reserve(p.vertices().size() * q.vertices().size());
  for (FacetMask a : p.vertices()) {
    for (FacetMask b : q.vertices()) verts.push_back(a | (b << shift));
  }
  return validate(p.dim() + q.dim(), std::move(verts), shift + q.num_facets());
}

SimplePolytope product_of_simplices(const std::vector<int>& dims) {
  if (dims.empty()) throw Error(ErrorCode::BadParameter, "need at least one simplex");
  SimplePolytope out = simplex(dims.front());
  for (std::size_t i = 1; i < dims.size(); ++i) out = product(out, simplex(dims[i]));
  return out;
}

SimplePolytope truncate_vertex(const SimplePolytope& p, int v) {
  if (v < 0 || v >= static_cast<int>(p.vertices().size())) {
    throw Error(ErrorCode::BadIndex, "no vertex " + std::to_string(v));
  }
  const int fresh = p.num_facets();
  if (fresh >= kMaxFacets) throw Error(ErrorCode::TooLarge, "truncation exceeds 64 facets");
  std::vector<FacetMask> verts;
  const FacetMask cut = p.vertices()[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (static_cast<int>(i) != v) verts.push_back(p.vertices()[i]);
  }
  for (int i : mask_indices(cut)) {
    verts.push_back((cut & ~(FacetMask{1} << i)) | (FacetMask{1} << fresh));
  }
  return validate(p.dim(), std::move(verts), fresh + 1);
}

std::vector<Face> faces_of_dim(const SimplePolytope& p, int d) {
  if (d < 0 || d > p.dim()) {
    throw Error(ErrorCode::BadDimension, "face dimension " + std::to_string(d) +
                                             " outside [0, " + std::to_string(p.dim()) + "]");
  }
  const int codim = p.dim() - d;
  std::unordered_set<FacetMask> seen;
  for (FacetMask v : p.vertices()) {
    for_each_k_submask(v, codim, [&](FacetMask s) { seen.insert(s); });
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (FacetMask s : seen) out.push_back(Face{s, d});
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_and_h_vector(const SimplePolytope& p) {
  const int n = p.dim();
  FVector out;
  out.f.resize(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    out.f[static_cast<std::size_t>(d)] = static_cast<long long>(faces_of_dim(p, d).size());
  }
  // sum_i h_i t^i = sum_i f_i (t - 1)^i
  out.h.assign(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i <= n; ++i) {
    long long binom = 1;  // C(i, j)
    for (int j = 0; j <= i; ++j) {
      const long long sign = ((i - j) % 2 == 0) ? 1 : -1;
      out.h[static_cast<std::size_t>(j)] += sign * binom * out.f[static_cast<std::size_t>(i)];
      binom = binom * (i - j) / (j + 1);
    }
  }
  return out;
}

std::vector<std::pair<Face, int>> two_face_census(const SimplePolytope& p) {
  if (p.dim() < 2) throw Error(ErrorCode::BadDimension, "2-faces need n >= 2");
  std::vector<std::pair<Face, int>> out;
  for (const Face& f : faces_of_dim(p, 2)) out.emplace_back(f, p.vertices_containing(f.facets));
  return out;
}

SimplePolytope facet_polytope(const SimplePolytope& p, int i) {
  if (i < 0 || i >= p.num_facets()) {
    throw Error(ErrorCode::BadIndex, "no facet " + std::to_string(i));
  }
  if (p.dim() == 1) throw Error(ErrorCode::DimensionTooLow, "facets of a segment are points");
  const FacetMask bit = FacetMask{1} << i;
  FacetMask neighbours = 0;
  for (FacetMask v : p.vertices()) {
    if (v & bit) neighbours |= v;
  }
  neighbours &= ~bit;
  std::vector<int> relabel(static_cast<std::size_t>(p.num_facets()), -1);
  int next = 0;
  for (int j : mask_indices(neighbours)) relabel[static_cast<std::size_t>(j)] = next++;
  std::vector<FacetMask> verts;
  for (FacetMask v : p.vertices()) {
    if ((v & bit) == 0) continue;
    FacetMask w = 0;
    for (int j : mask_indices(v & ~bit)) w |= FacetMask{1} << relabel[static_cast<std::size_t>(j)];
    verts.push_back(w);
  }
  return validate(p.dim() - 1, std::move(verts), next);
}

namespace {

struct IsoSearch {
  const SimplePolytope& p;
  const SimplePolytope& q;
  std::vector<FacetMask> adj_p, adj_q;
  std::vector<int> deg_p, deg_q, inc_p, inc_q;
  std::vector<int> image;
  FacetMask used = 0;
  std::vector<FacetMask> target;

  static std::vector<FacetMask> adjacency(const SimplePolytope& s) {
    std::vector<FacetMask> adj(static_cast<std::size_t>(s.num_facets()), 0);
    for (FacetMask v : s.vertices()) {
      for (int i : mask_indices(v)) adj[static_cast<std::size_t>(i)] |= v;
    }
    return adj;
  }

  IsoSearch(const SimplePolytope& a, const SimplePolytope& b) : p(a), q(b) {
    adj_p = adjacency(p);
    adj_q = adjacency(q);
    for (int i = 0; i < p.num_facets(); ++i) {
      deg_p.push_back(popcount(adj_p[static_cast<std::size_t>(i)]));
      inc_p.push_back(p.vertices_containing(FacetMask{1} << i));
      deg_q.push_back(popcount(adj_q[static_cast<std::size_t>(i)]));
      inc_q.push_back(q.vertices_containing(FacetMask{1} << i));
    }
    image.assign(static_cast<std::size_t>(p.num_facets()), -1);
    target = q.vertices();
    std::sort(target.begin(), target.end());
  }

  bool leaf() const {
    std::vector<FacetMask> mapped;
    mapped.reserve(p.vertices().size());
    for (FacetMask v : p.vertices()) {
      FacetMask w = 0;
      for (int i : mask_indices(v)) w |= FacetMask{1} << image[static_cast<std::size_t>(i)];
      mapped.push_back(w);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target;
  }

  bool search(int i) {
    if (i == p.num_facets()) return leaf();
    const auto si = static_cast<std::size_t>(i);
    for (int j = 0; j < q.num_facets(); ++j) {
      const auto sj = static_cast<std::size_t>(j);
      if ((used >> j & 1U) != 0 || deg_p[si] != deg_q[sj] || inc_p[si] != inc_q[sj]) continue;
      bool ok = true;
      for (int a = 0; a < i && ok; ++a) {
        const bool ap = (adj_p[si] >> a & 1U) != 0;
        const bool aq = (adj_q[sj] >> image[static_cast<std::size_t>(a)] & 1U) != 0;
        ok = ap == aq;
      }
      if (!ok) continue;
      image[si] = j;
      used |= FacetMask{1} << j;
      if (search(i + 1)) return true;
      used &= ~(FacetMask{1} << j);
      image[si] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const SimplePolytope& p, const SimplePolytope& q) {
  if (p.dim() != q.dim() || p.num_facets() != q.num_facets() ||
      p.vertices().size() != q.vertices().size()) {
    return false;
  }
  IsoSearch s(p, q);
  return s.search(0);
}

}  // namespace smallcover
