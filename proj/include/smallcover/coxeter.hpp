#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <variant>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/nerve.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

using Rational = boost::multiprecision::cpp_rational;

/// m_st of a right-angled Coxeter system.
enum class CoxeterOrder : std::uint8_t { One = 1, Two = 2, Infinite = 0 };

/// The right-angled Coxeter system W_P: one involution per facet, adjacent
/// facets commute.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(const SimplePolytope& p);

  [[nodiscard]] int rank() const noexcept { return adjacency_.size(); }
  [[nodiscard]] CoxeterOrder order(int s, int t) const noexcept;
  /// s and t commute (adjacent facets, or s == t).
  [[nodiscard]] bool commute(int s, int t) const noexcept { return adjacency_(s, t); }
  /// Connected components of the Coxeter graph (edges where m_st = ∞), each
  /// sorted, listed by smallest member.
  [[nodiscard]] const std::vector<std::vector<int>>& components() const noexcept {
    return components_;
  }
  [[nodiscard]] const AdjacencyGraph& adjacency() const noexcept { return adjacency_; }

 private:
  AdjacencyGraph adjacency_;
  std::vector<std::vector<int>> components_;
};

struct FiniteGroup {
  int k;  // W ≅ (Z_2)^k
};
struct VirtuallyNilpotentGroup {
  int k;  // Z_2 factors
  int l;  // infinite dihedral factors
};
struct NonAffineGroup {
  std::vector<int> witness;  // a Coxeter graph component with >= 3 nodes
};
using GroupClass = std::variant<FiniteGroup, VirtuallyNilpotentGroup, NonAffineGroup>;

GroupClass classify_group(const SimplePolytope& p);
std::string describe(const GroupClass& g);

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteDegenerate, Indefinite };
std::string_view to_string(Definiteness d) noexcept;

struct GramMatrix {
  int size = 0;
  std::vector<Rational> entries;  // row-major
  Definiteness definiteness = Definiteness::Indefinite;

  [[nodiscard]] const Rational& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i * size + j)];
  }
};

/// Cosine form B(e_s, e_t) = -cos(pi / m_st): 1 on the diagonal, 0 for
/// commuting pairs, -1 for m_st = ∞. Definiteness by exact elimination.
GramMatrix gram_definiteness(const SimplePolytope& p);

/// Inertia-based classification of a symmetric rational matrix.
Definiteness classify_symmetric(int size, std::vector<Rational> entries);

using Word = std::vector<int>;

GF2Vector abelianization(const Word& w, const SimplePolytope& p);

/// Geodesic representative: cancels pairs s..s whose letters in between all
/// commute with s, then returns the lexicographically least word of the
/// commutation class.
Word normal_form(const Word& w, const SimplePolytope& p);

class CharFunc;

struct MomentAngleTarget {};
struct SmallCoverTarget {
  const CharFunc* lambda;
};
using Pi1Target = std::variant<MomentAngleTarget, SmallCoverTarget>;

/// Whether w lies in pi_1(RZ_P) = ker Ab, or in pi_1(M) = ker(λ̄ ∘ Ab).
bool pi1_membership(const Word& w, const SimplePolytope& p, const Pi1Target& target);

struct Pi1Trivial {};
struct Pi1FreeAbelian {
  int l;
};
struct Pi1NotVirtuallyNilpotent {};
using Pi1Description = std::variant<Pi1Trivial, Pi1FreeAbelian, Pi1NotVirtuallyNilpotent>;

/// pi_1 of the real moment-angle manifold.
Pi1Description pi1_rz_description(const SimplePolytope& p);
std::string describe(const Pi1Description& d);

}  // namespace smallcover
