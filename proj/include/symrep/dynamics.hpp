#pragma once

#include <string>
#include <vector>

#include "symrep/mset.hpp"

namespace symrep {

/// An ℕ-action on a finite set, given by the action of the generator 1.
struct FunctionalGraph {
  std::vector<Index> step;

  std::size_t size() const { return step.size(); }
};

/// Throws IndexOutOfRange when a step value leaves the state set.
FunctionalGraph make_functional_graph(std::vector<Index> step);

/// States 0..n, k -> k-1, 0 -> 0.
FunctionalGraph tower(std::size_t n);

/// A ℤ-set, given by the permutation the generator 1 acts by. `points` are the
/// underlying states of the graph the set was extracted from.
struct ZSet {
  std::vector<Index> points;
  std::vector<Index> shift;  // on positions into `points`

  std::size_t size() const { return shift.size(); }
  /// Sorted cycle lengths.
  std::vector<std::size_t> cycle_type() const;
};

/// Throws NotEquivariant when `shift` is not a bijection.
ZSet make_zset(std::vector<Index> points, std::vector<Index> shift);

/// Shift-compatible bijection between ZSets (positions), if one exists.
std::optional<std::vector<Index>> zset_isomorphism(ZSet const& a, ZSet const& b);

struct EventualImage {
  std::vector<Index> states;       // sorted
  std::vector<Index> restriction;  // step on positions into `states`; a bijection
};

/// ∩_k step^k(S), by iterating the image until it stops shrinking.
EventualImage eventual_image(FunctionalGraph const& fg);

/// ℛ for ℕ: states admitting an infinite backward orbit σ(-n) = n·a, σ(n) = b_n.
/// On a finite graph those are exactly the states lying on a cycle, and the
/// backward orbit is then unique.
ZSet rinv_nat(FunctionalGraph const& fg);

/// ℒ for ℕ: the colimit of S -> S -> ... along step. Each class [g, a] equals
/// [g - t, step^t(a)] with step^t(a) cyclic, so classes are indexed by cyclic
/// states. `unit[a]` is the position of [0, a].
struct LinvNat {
  ZSet zset;
  std::vector<Index> unit;
};
LinvNat linv_nat(FunctionalGraph const& fg);

struct LimitCycles {
  std::vector<std::vector<Index>> cycles;  // each starts at its least state; ordered by that state
  std::vector<std::size_t> transient;      // least k with step^k(a) in the eventual image
};

LimitCycles limit_cycles(FunctionalGraph const& fg);

/// The monoid {id, f, f², ...} of distinct iterates. Element i is f^i; the
/// returned M-set is the state set with f^i acting by iteration.
struct TransitionMonoid {
  FiniteMonoid monoid;
  FinMSet mset;
  Index generator;  // index of f (0 when f = id)
};

/// Throws SizeBoundExceeded when there are more than
/// `bounds.max_transition_order` distinct iterates.
TransitionMonoid transition_monoid(FunctionalGraph const& fg, Bounds const& bounds = {});

/// An action of the free monoid on finitely many labelled parameters.
struct DynSystem {
  std::vector<std::string> parameters;
  std::size_t states = 0;
  std::vector<std::vector<Index>> step;  // step[s][a]
};

/// Throws ShapeMismatch or IndexOutOfRange.
DynSystem make_dyn_system(std::vector<std::string> parameters, std::size_t states,
                          std::vector<std::vector<Index>> step);
DynSystem dyn_system(FunctionalGraph const& fg, std::string parameter = "1");

/// Morphism (υ, f) with f(s·a) = υ(s)·f(a).
struct DynMorphism {
  DynSystem source;
  DynSystem target;
  std::vector<Index> parameter_map;
  std::vector<Index> state_map;
};

/// Checks the square on every generator (enough for a free monoid). Throws
/// ShapeMismatch or NotEquivariant (witness = s, a).
DynMorphism validate_dyn_morphism(DynSystem const& source, DynSystem const& target,
                                  std::vector<Index> parameter_map,
                                  std::vector<Index> state_map);
DynMorphism identity_dyn(DynSystem const& d);
/// second ∘ first.
DynMorphism compose_dyn(DynMorphism const& first, DynMorphism const& second);

}  // namespace symrep
