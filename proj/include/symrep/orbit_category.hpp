#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symrep/kan.hpp"

namespace symrep {

/// Object (N, H) of the orbit category, realized as M ×_N q*(G(N)/H).
struct OrbitObject {
  Submonoid submonoid;
  GroupCompletion completion;  // of N
  std::vector<Index> subgroup; // H <= G(N)
  FinMSet realization;
  Index base_point;            // [1, H]
  std::vector<Index> base_lift;  // base_lift[y]: least m with m·base_point = y

  bool is_trivial() const;  // (e, e)
  std::string label() const;
};

/// Full subcategory of M-sets on the generating objects. Morphisms i -> j
/// are equivariant maps realization(i) -> realization(j), listed in
/// lexicographic order.
class OrbitCategory {
 public:
  OrbitCategory(FiniteMonoid monoid, std::vector<OrbitObject> objects, Bounds const& bounds);

  FiniteMonoid const& monoid() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return objects_.size(); }
  OrbitObject const& object(Index i) const { return objects_.at(i); }
  std::vector<OrbitObject> const& objects() const noexcept { return objects_; }
  std::vector<std::vector<Index>> const& hom(Index i, Index j) const { return homs_.at(i).at(j); }

  /// Index in hom(i, k) of g ∘ f for f in hom(i, j), g in hom(j, k).
  Index compose(Index i, Index j, Index k, Index g, Index f) const;
  Index identity(Index i) const;
  /// Index of a mapping inside hom(i, j); throws ObjectNotFound.
  Index morphism_index(Index i, Index j, std::vector<Index> const& mapping) const;

  std::optional<Index> find(std::vector<Index> const& submonoid,
                            std::vector<Index> const& subgroup) const;
  /// Throws ObjectNotFound when (e, e) is absent.
  Index trivial_object() const;

 private:
  FiniteMonoid monoid_;
  std::vector<OrbitObject> objects_;
  std::vector<std::vector<std::vector<std::vector<Index>>>> homs_;
  std::vector<std::vector<std::map<std::vector<Index>, Index>>> positions_;
};

OrbitObject make_orbit_object(Submonoid const& n, std::vector<Index> const& subgroup);

/// Every N <= M and H <= G(N). Throws SizeBoundExceeded above
/// `bounds.max_orbit_all_order`.
OrbitCategory build_orbit_category(FiniteMonoid const& monoid, Bounds const& bounds = {});
/// Objects drawn from a family; ordered by submonoid then subgroup.
OrbitCategory build_orbit_category(FamilyZY const& family, Bounds const& bounds = {});

/// Associativity, unit laws and closure of hom-sets under composition.
bool check_category_laws(OrbitCategory const& category);

/// Hom_M(realization(N,H), X) against ℛ^M_N(X)^H. `fixed_points` are the
/// points of X (through the counit) that form ℛ^M_N(X)^H; `bijection[k]` is
/// the position in `fixed_points` of the k-th hom, via φ |-> φ([1,H]).
struct HomComparison {
  std::vector<std::vector<Index>> homs;
  std::vector<Index> fixed_points;
  std::vector<Index> bijection;
  bool bijective;
};

HomComparison compare_hom(OrbitObject const& object, FinMSet const& x, Bounds const& bounds = {});
/// compare_hom against the realization of another object.
HomComparison hom_via_rinv(OrbitCategory const& category, Index from, Index to,
                           Bounds const& bounds = {});

/// A contravariant functor on the orbit category with finite-set values.
/// `values[i]` lists opaque element labels; `action[i][j][k]` is the function
/// values[j] -> values[i] (by position) of the k-th morphism in hom(i, j).
struct OrbitDiagram {
  std::shared_ptr<OrbitCategory const> category;
  std::vector<std::vector<Index>> values;
  std::vector<std::vector<std::vector<std::vector<Index>>>> action;
};

bool check_functoriality(OrbitDiagram const& diagram);

/// 𝔛(X)(N,H) = ℛ^M_N(X)^H, labelled by points of X.
OrbitDiagram x_functor(std::shared_ptr<OrbitCategory const> category, FinMSet const& x,
                       Bounds const& bounds = {});

/// Hom(-, (N,H)); labels are morphism indices.
OrbitDiagram representable(std::shared_ptr<OrbitCategory const> category, Index object);

/// Constant one-point diagram.
OrbitDiagram constant_point(std::shared_ptr<OrbitCategory const> category);

/// Υ(F) = F((e,e)). End((e,e)) = {φ_m : [1] |-> [m]} with φ_x ∘ φ_y = φ_{y*x},
/// so m·v := F(φ_m)(v) is a left M-action. Throws ObjectNotFound.
FinMSet upsilon(OrbitDiagram const& diagram);

}  // namespace symrep
