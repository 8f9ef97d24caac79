#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symrep/monoid.hpp"

namespace symrep {

/// A finite set with a left action of a finite monoid. The action table is
/// stored row per monoid element: entry (m, a) is m·a.
class FinMSet {
 public:
  /// Throws ShapeMismatch, IndexOutOfRange, IdentityLawViolated or
  /// CompatibilityViolated (witness = m, n, a).
  static FinMSet from_table(FiniteMonoid monoid,
                            std::vector<std::vector<Index>> const& action,
                            std::vector<std::string> names = {});
  static FinMSet from_flat(FiniteMonoid monoid, std::size_t size,
                           std::vector<Index> action,
                           std::vector<std::string> names = {});

  FiniteMonoid const& monoid() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return size_; }
  Index act(Index m, Index a) const { return action_[m * size_ + a]; }
  std::span<Index const> row(Index m) const {
    return {action_.data() + m * size_, size_};
  }
  std::vector<Index> const& flat_action() const noexcept { return action_; }
  std::vector<std::vector<Index>> action() const;

  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string label(Index a) const;

  friend bool operator==(FinMSet const& a, FinMSet const& b) {
    return a.size_ == b.size_ && a.monoid_ == b.monoid_ && a.action_ == b.action_;
  }

 private:
  FinMSet(FiniteMonoid monoid, std::size_t size, std::vector<Index> action,
          std::vector<std::string> names)
      : monoid_(std::move(monoid)),
        size_(size),
        action_(std::move(action)),
        names_(std::move(names)) {}

  FiniteMonoid monoid_;
  std::size_t size_;
  std::vector<Index> action_;
  std::vector<std::string> names_;
};

FinMSet validate_mset(FiniteMonoid const& monoid,
                      std::vector<std::vector<Index>> const& action);

/// M acting on itself by left multiplication.
FinMSet regular_mset(FiniteMonoid const& monoid);
/// One point, trivial action.
FinMSet point_mset(FiniteMonoid const& monoid);
FinMSet empty_mset(FiniteMonoid const& monoid);
/// `size` points, every element acting as the identity.
FinMSet trivial_mset(FiniteMonoid const& monoid, std::size_t size);

/// Equivariant map between M-sets over the same monoid.
struct EqMap {
  FinMSet source;
  FinMSet target;
  std::vector<Index> mapping;

  Index operator()(Index a) const { return mapping[a]; }
};

bool is_equivariant(FinMSet const& source, FinMSet const& target,
                    std::span<Index const> mapping);
/// Throws MonoidMismatch, ShapeMismatch or NotEquivariant (witness = m, a).
EqMap make_eqmap(FinMSet source, FinMSet target, std::vector<Index> mapping);
EqMap identity_map(FinMSet const& a);
/// outer ∘ inner.
EqMap compose(EqMap const& outer, EqMap const& inner);
bool is_injective(std::span<Index const> mapping);
bool is_bijective(std::span<Index const> mapping, std::size_t target_size);

/// Every equivariant mapping A -> B in lexicographic order. The search
/// assigns the least unassigned point and propagates along its cyclic
/// sub-M-set, so only generating points branch. Throws SizeBoundExceeded when
/// |B|^(generator count) exceeds `bounds.max_enum`.
std::vector<std::vector<Index>> equivariant_mappings(FinMSet const& source,
                                                     FinMSet const& target,
                                                     Bounds const& bounds = {});
std::vector<EqMap> equivariant_maps(FinMSet const& source, FinMSet const& target,
                                    Bounds const& bounds = {});

/// First equivariant bijection A -> B, if any.
std::optional<std::vector<Index>> find_isomorphism(FinMSet const& a,
                                                   FinMSet const& b,
                                                   Bounds const& bounds = {});
bool isomorphic(FinMSet const& a, FinMSet const& b, Bounds const& bounds = {});

/// {a : s·a = a for all s in S}, sorted.
std::vector<Index> fixed_points(FinMSet const& a, std::vector<Index> const& elements);

/// Weak orbits: components of the graph a -- m·a. Classes sorted, ordered by
/// least element.
std::vector<std::vector<Index>> orbits(FinMSet const& a);

bool is_symmetric(FinMSet const& a);

// ---------------------------------------------------------------------------
// Change of monoid along a submonoid inclusion N <= M.

/// Throws SubmonoidMismatch when N is not a submonoid of A's monoid.
FinMSet restrict(FinMSet const& a, Submonoid const& n);

struct Induced {
  FinMSet mset;  // over the parent monoid
  EqMap unit;    // A -> restrict(mset, N), a |-> [1, a]
};

/// M ×_N A: classes of M × A under (m*n, a) ~ (m, n·a). Points are ordered by
/// the least encoding m·|A| + a in each class. Throws SubmonoidMismatch when A
/// is not over N.
Induced induce(Submonoid const& n, FinMSet const& a);

struct Coinduced {
  FinMSet mset;                              // over the parent monoid
  std::vector<std::vector<Index>> functions; // point i is functions[i]: M -> A
};

/// Hom_N(M, A) with (m·φ)(x) = φ(x*m); points in lexicographic order.
Coinduced coinduce(Submonoid const& n, FinMSet const& a, Bounds const& bounds = {});

// ---------------------------------------------------------------------------
// Limits and colimits

struct Coproduct {
  FinMSet mset;
  EqMap left;
  EqMap right;
};
/// A-points first, then B-points.
Coproduct coproduct(FinMSet const& a, FinMSet const& b);

/// Point (i, j) is index i·|B| + j.
FinMSet product(FinMSet const& a, FinMSet const& b);

struct Pushout {
  FinMSet mset;
  EqMap from_a;
  EqMap from_b;
};
/// (A ⊔ B) / (f(c) ~ g(c)), closed equivariantly. Throws MonoidMismatch.
Pushout pushout(EqMap const& f, EqMap const& g);

/// Equivariant equivalence relation on an M-set.
struct MSetCongruence {
  FinMSet mset;
  std::vector<Index> representative;  // minimal index in class

  bool related(Index a, Index b) const {
    return representative[a] == representative[b];
  }
};

/// Least equivariant equivalence relation containing the pairs.
MSetCongruence mset_congruence_closure(
    FinMSet const& a, std::vector<std::pair<Index, Index>> const& pairs);
/// Validates an arbitrary partition labelling; throws NotEquivariant.
MSetCongruence make_mset_congruence(FinMSet const& a,
                                    std::vector<Index> const& class_labels);

struct QuotientMSet {
  FinMSet mset;
  EqMap projection;
};
/// Classes ordered by representative.
QuotientMSet quotient_mset(FinMSet const& a, MSetCongruence const& rho);

}  // namespace symrep
