#include "smallcover/coxeter.hpp"

#include <algorithm>
#include <string>

#include "smallcover/charfunc.hpp"
#include "smallcover/error.hpp"

namespace smallcover {

CoxeterSystem::CoxeterSystem(const SimplePolytope& p) : adjacency_(smallcover::adjacency(p)) {
  const int r = adjacency_.size();
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  for (int start = 0; start < r; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const int s = comp[head];
      for (int t = 0; t < r; ++t) {
        if (!seen[static_cast<std::size_t>(t)] && !adjacency_(s, t)) {
          seen[static_cast<std::size_t>(t)] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components_.push_back(std::move(comp));
  }
}

CoxeterOrder CoxeterSystem::order(int s, int t) const noexcept {
  if (s == t) return CoxeterOrder::One;
  return adjacency_(s, t) ? CoxeterOrder::Two : CoxeterOrder::Infinite;
}

GroupClass classify_group(const SimplePolytope& p) {
  const CoxeterSystem cox(p);
  int k = 0;
  int l = 0;
  for (const auto& comp : cox.components()) {
    // The only irreducible right-angled affine Coxeter group is Ã_1, so a
    // component with three or more nodes is neither finite nor affine.
    if (comp.size() >= 3) return NonAffineGroup{comp};
    (comp.size() == 1 ? k : l) += 1;
  }
  if (l == 0) return FiniteGroup{k};
  return VirtuallyNilpotentGroup{k, l};
}

std::string describe(const GroupClass& g) {
  struct {
    std::string operator()(const FiniteGroup& f) const {
      return "finite: (Z2)^" + std::to_string(f.k);
    }
    std::string operator()(const VirtuallyNilpotentGroup& v) const {
      return "virtually nilpotent: (Z2)^" + std::to_string(v.k) + " x (A1~)^" + std::to_string(v.l);
    }
    std::string operator()(const NonAffineGroup& n) const {
      return "contains non-affine component of size " + std::to_string(n.witness.size());
    }
  } visitor;
  return std::visit(visitor, g);
}

std::string_view to_string(Definiteness d) noexcept {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::PositiveSemidefiniteDegenerate: return "positive-semidefinite-degenerate";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "unknown";
}

Definiteness classify_symmetric(int size, std::vector<Rational> a) {
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i * size + j)]; };
  std::vector<int> active(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) active[static_cast<std::size_t>(i)] = i;

  // Symmetric elimination with diagonal pivots; congruence preserves inertia.
  while (!active.empty()) {
    int pivot = -1;
    for (int i : active) {
      if (at(i, i) < 0) return Definiteness::Indefinite;
      if (pivot < 0 && at(i, i) > 0) pivot = i;
    }
    if (pivot < 0) {
      // Zero diagonal block: any nonzero off-diagonal entry gives a 2x2 minor
      // [[0,b],[b,0]] with negative determinant.
      for (int i : active) {
        for (int j : active) {
          if (at(i, j) != 0) return Definiteness::Indefinite;
        }
      }
      return Definiteness::PositiveSemidefiniteDegenerate;
    }
    std::erase(active, pivot);
    const Rational d = at(pivot, pivot);
    for (int i : active) {
      if (at(i, pivot) == 0) continue;
      const Rational factor = at(i, pivot) / d;
      for (int j : active) at(i, j) -= factor * at(pivot, j);
    }
  }
  return Definiteness::PositiveDefinite;
}

GramMatrix gram_definiteness(const SimplePolytope& p) {
  const CoxeterSystem cox(p);
  GramMatrix g;
  g.size = cox.rank();
  g.entries.resize(static_cast<std::size_t>(g.size * g.size));
  for (int s = 0; s < g.size; ++s) {
    for (int t = 0; t < g.size; ++t) {
      Rational v;
      switch (cox.order(s, t)) {
        case CoxeterOrder::One: v = 1; break;
        case CoxeterOrder::Two: v = 0; break;
        case CoxeterOrder::Infinite: v = -1; break;
      }
      g.entries[static_cast<std::size_t>(s * g.size + t)] = v;
    }
  }
  g.definiteness = classify_symmetric(g.size, g.entries);
  return g;
}

namespace {

void check_word(const Word& w, const SimplePolytope& p) {
  for (int s : w) {
    if (s < 0 || s >= p.num_facets()) {
      throw Error(ErrorCode::BadIndex, "generator " + std::to_string(s) + " out of range");
    }
  }
}

}  // namespace

GF2Vector abelianization(const Word& w, const SimplePolytope& p) {
  check_word(w, p);
  GF2Vector v = 0;
  for (int s : w) v ^= GF2Vector{1} << s;
  return v;
}

Word normal_form(const Word& w, const SimplePolytope& p) {
  check_word(w, p);
  const AdjacencyGraph adj = adjacency(p);
  Word cur = w;

  // In a right-angled Coxeter group a word is geodesic iff no letter s occurs
  // twice with only letters commuting with s (and distinct from it) between.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      const int s = cur[i];
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[j] == s) {
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!adj(s, cur[j])) break;
      }
    }
  }

  // Lexicographic normal form of the trace: repeatedly emit the smallest
  // letter that can be commuted to the front.
  Word out;
  out.reserve(cur.size());
  while (!cur.empty()) {
    std::size_t best = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      bool front = true;
      for (std::size_t q = 0; q < i && front; ++q) {
        front = cur[q] != cur[i] && adj(cur[q], cur[i]);
      }
      if (front && (best == cur.size() || cur[i] < cur[best])) best = i;
    }
    out.push_back(cur[best]);
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool pi1_membership(const Word& w, const SimplePolytope& p, const Pi1Target& target) {
  const GF2Vector ab = abelianization(w, p);
  if (std::holds_alternative<MomentAngleTarget>(target)) return ab == 0;
  const CharFunc* lambda = std::get<SmallCoverTarget>(target).lambda;
  if (lambda == nullptr) throw Error(ErrorCode::InvalidCharFunc, "no characteristic function");
  const CharFuncCheck check = validate_charfunc(p, *lambda);
  if (!check.valid()) {
    throw Error(ErrorCode::InvalidCharFunc,
                "not a basis at vertex " + std::to_string(*check.failing_vertex));
  }
  return lambda->matrix().apply(ab) == 0;
}

Pi1Description pi1_rz_description(const SimplePolytope& p) {
  if (is_two_neighborly(p)) return Pi1Trivial{};
  const GroupClass g = classify_group(p);
  if (const auto* vn = std::get_if<VirtuallyNilpotentGroup>(&g)) return Pi1FreeAbelian{vn->l};
  return Pi1NotVirtuallyNilpotent{};
}

std::string describe(const Pi1Description& d) {
  if (std::holds_alternative<Pi1Trivial>(d)) return "trivial";
  if (const auto* f = std::get_if<Pi1FreeAbelian>(&d)) return "Z^" + std::to_string(f->l);
  return "not virtually nilpotent";
}

}  // namespace smallcover
