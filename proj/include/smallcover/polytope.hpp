#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace smallcover {

/// A set of facet indices, one bit per facet. Polytopes are limited to 64
/// facets.
using FacetMask = std::uint64_t;

inline constexpr int kMaxFacets = 64;

[[nodiscard]] inline int popcount(FacetMask m) noexcept { return std::popcount(m); }

/// Ascending list of the indices set in `m`.
[[nodiscard]] std::vector<int> mask_indices(FacetMask m);
[[nodiscard]] FacetMask mask_of(const std::vector<int>& indices);

/// A face of a simple polytope, identified by the facets containing it. The
/// empty mask is the polytope itself.
struct Face {
  FacetMask facets = 0;
  int dim = 0;

  [[nodiscard]] int codim() const noexcept { return popcount(facets); }
  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

struct FVector {
  std::vector<long long> f;  // f[0..n], f[n] == 1
  std::vector<long long> h;  // h[0..n]
};

/// Combinatorial simple polytope given by vertex–facet incidence. Instances are
/// only produced by `validate` and the constructors below, so every object
/// satisfies simplicity, the two-endpoint ridge condition and has no dangling
/// facet.
class SimplePolytope {
 public:
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] int num_facets() const noexcept { return num_facets_; }
  [[nodiscard]] const std::vector<FacetMask>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] FacetMask all_facets() const noexcept;

  /// True iff the facets in `s` have a common point, i.e. `s` is a subset of
  /// some vertex.
  [[nodiscard]] bool is_face(FacetMask s) const noexcept;

  /// Number of vertices whose facet set contains `s`.
  [[nodiscard]] int vertices_containing(FacetMask s) const noexcept;

  friend bool operator==(const SimplePolytope&, const SimplePolytope&) = default;

 private:
  friend SimplePolytope validate(int dim, std::vector<FacetMask> vertices, int num_facets);
  SimplePolytope(int dim, int num_facets, std::vector<FacetMask> vertices)
      : dim_(dim), num_facets_(num_facets), vertices_(std::move(vertices)) {}

  int dim_;
  int num_facets_;
  std::vector<FacetMask> vertices_;
};

/// Checks the incidence data and returns the polytope. `num_facets < 0`
/// infers the facet count from the largest index used.
SimplePolytope validate(int dim, std::vector<FacetMask> vertices, int num_facets = -1);
SimplePolytope validate(int dim, const std::vector<std::vector<int>>& vertices,
                        int num_facets = -1);

SimplePolytope simplex(int n);
/// Facets 2j and 2j+1 are the opposite pair (F_j, G_j).
SimplePolytope cube(int n);
/// Facet i is the edge between vertices {i-1, i} and {i, i+1} (mod m).
SimplePolytope polygon(int m);
/// Dual of the cyclic polytope C(k, n): facet i corresponds to the i-th point on
/// the moment curve, vertices to facets of C(k, n) (Gale's evenness condition).
SimplePolytope dual_cyclic(int k, int n);
/// Facets of `p` keep their indices; facets of `q` are shifted by
/// p.num_facets().
SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q);
/// Δ^{n_1} × ... × Δ^{n_m}, blocks in order.
SimplePolytope product_of_simplices(const std::vector<int>& dims);

/// Replaces vertex `v` by a new simplex facet (index num_facets()).
SimplePolytope truncate_vertex(const SimplePolytope& p, int v);

/// All faces of dimension d, sorted by facet mask.
std::vector<Face> faces_of_dim(const SimplePolytope& p, int d);

FVector f_and_h_vector(const SimplePolytope& p);

/// Every 2-face with the number of its vertices (edges of the polygon).
std::vector<std::pair<Face, int>> two_face_census(const SimplePolytope& p);

/// The facet F_i as an (n-1)-polytope. Its facets are the nonempty F_i ∩ F_j,
/// indexed by increasing j.
SimplePolytope facet_polytope(const SimplePolytope& p, int i);

/// Exhaustive facet-relabeling search. Intended for small instances.
bool is_isomorphic(const SimplePolytope& p, const SimplePolytope& q);

}  // namespace smallcover
