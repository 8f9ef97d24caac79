#pragma once

#include <vector>

#include "symrep/monoid.hpp"

namespace symrep {

/// The universal map q: M -> G(M) of a finite monoid into a group.
///
/// For finite M the completion is the largest group quotient of M: every
/// group image kills idempotents, and once the idempotents are identified
/// with 1 each element m satisfies m^p = 1 for its period p. So G(M) is the
/// quotient by the congruence generated by {(e, 1) : e idempotent}, and q is
/// surjective.
struct GroupCompletion {
  FiniteMonoid monoid;
  FiniteMonoid group;
  MonoidHom q;
  Congruence kernel;

  Index operator()(Index m) const { return q.mapping[m]; }
  /// Some m with q(m) = g (the least one); exists because q is onto.
  Index lift(Index g) const;
};

GroupCompletion group_completion(FiniteMonoid const& monoid);

/// The unique h: G(M) -> G' with h ∘ q = f. Throws TargetNotGroup when G' is
/// not a group, MonoidMismatch when f does not start at M.
MonoidHom factor_through_completion(GroupCompletion const& completion,
                                    MonoidHom const& f);

/// Exhaustive check of the initial property against the given groups.
bool verify_universal_property(GroupCompletion const& completion,
                               std::vector<FiniteMonoid> const& targets,
                               Bounds const& bounds = {});

/// A list of subgroups of a group, stored as sorted element lists.
struct SubgroupFamily {
  FiniteMonoid group;
  std::vector<std::vector<Index>> subgroups;
};

bool is_subgroup(FiniteMonoid const& group, std::vector<Index> const& subset);
std::vector<Index> generated_subgroup(FiniteMonoid const& group,
                                      std::vector<Index> const& generators);

/// All subgroups, in subset_order. Throws NotAGroup, SizeBoundExceeded.
SubgroupFamily all_subgroups(FiniteMonoid const& group, Bounds const& bounds = {});

/// Throws NotASubgroup when a member is not a subgroup.
bool is_conjugacy_closed(FiniteMonoid const& group,
                         std::vector<std::vector<Index>> const& subgroups);

/// Left cosets gH, each sorted, ordered by least element.
std::vector<std::vector<Index>> left_cosets(FiniteMonoid const& group,
                                            std::vector<Index> const& subgroup);

}  // namespace symrep
