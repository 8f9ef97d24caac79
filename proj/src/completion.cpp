#include "symrep/completion.hpp"

#include <algorithm>
#include <set>

namespace symrep {

Index GroupCompletion::lift(Index g) const {
  for (Index m = 0; m < q.mapping.size(); ++m)
    if (q.mapping[m] == g) return m;
  throw Error(ErrorCode::IndexOutOfRange,
              "group element " + std::to_string(g) + " has no preimage");
}

GroupCompletion group_completion(FiniteMonoid const& monoid) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index e : idempotents(monoid))
    if (e != monoid.identity()) pairs.emplace_back(e, monoid.identity());
  Congruence kernel = congruence_closure(monoid, pairs);
  QuotientMonoid quotient = quotient_monoid(monoid, kernel);
  return GroupCompletion{monoid, quotient.monoid, std::move(quotient.projection),
                         std::move(kernel)};
}

MonoidHom factor_through_completion(GroupCompletion const& completion,
                                    MonoidHom const& f) {
  if (!(f.source == completion.monoid))
    throw Error(ErrorCode::MonoidMismatch,
                "homomorphism does not start at the completed monoid");
  if (!is_group(f.target))
    throw Error(ErrorCode::TargetNotGroup, "target of f is not a group");
  std::vector<Index> mapping(completion.group.size());
  for (Index g = 0; g < mapping.size(); ++g) mapping[g] = f(completion.lift(g));
  // f constant on fibres of q is what makes h well defined.
  for (Index m = 0; m < completion.monoid.size(); ++m)
    if (mapping[completion(m)] != f(m))
      throw Error(ErrorCode::InvalidHom, "f does not factor through q");
  return make_hom(completion.group, f.target, std::move(mapping));
}

bool verify_universal_property(GroupCompletion const& completion,
                               std::vector<FiniteMonoid> const& targets,
                               Bounds const& bounds) {
  if (!is_group(completion.group) ||
      !is_hom(completion.monoid, completion.group, completion.q.mapping))
    return false;
  for (auto const& target : targets) {
    if (!is_group(target))
      throw Error(ErrorCode::TargetNotGroup, "universal-property target is not a group");
    auto from_monoid = monoid_homs(completion.monoid, target, bounds);
    auto from_group = monoid_homs(completion.group, target, bounds);
    for (auto const& f : from_monoid) {
      std::size_t factorizations = 0;
      for (auto const& h : from_group) {
        bool agrees = true;
        for (Index m = 0; m < completion.monoid.size() && agrees; ++m)
          agrees = h(completion(m)) == f(m);
        if (agrees) ++factorizations;
      }
      if (factorizations != 1) return false;
    }
  }
  return true;
}

bool is_subgroup(FiniteMonoid const& group, std::vector<Index> const& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(group.size(), false);
  for (Index h : subset) {
    if (h >= group.size()) return false;
    in[h] = true;
  }
  if (!in[group.identity()]) return false;
  for (Index a : subset) {
    for (Index b : subset)
      if (!in[group.mul(a, b)]) return false;
  }
  // Closure under multiplication suffices in a finite group.
  return true;
}

std::vector<Index> generated_subgroup(FiniteMonoid const& group,
                                      std::vector<Index> const& generators) {
  std::vector<Index> members = submonoid_generated(group, generators).elements;
  return members;
}

SubgroupFamily all_subgroups(FiniteMonoid const& group, Bounds const& bounds) {
  if (!is_group(group)) throw Error(ErrorCode::NotAGroup, "all_subgroups: not a group");
  if (group.size() > bounds.max_subgroup_order)
    throw Error(ErrorCode::SizeBoundExceeded,
                "all_subgroups: group order exceeds bound " +
                    std::to_string(bounds.max_subgroup_order));
  std::set<std::vector<Index>> found;
  for (Index g = 0; g < group.size(); ++g) found.insert(generated_subgroup(group, {g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Index>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Index> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generated_subgroup(group, gens)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<Index>> subgroups(found.begin(), found.end());
  std::sort(subgroups.begin(), subgroups.end(), subset_order);
  return SubgroupFamily{group, std::move(subgroups)};
}

bool is_conjugacy_closed(FiniteMonoid const& group,
                         std::vector<std::vector<Index>> const& subgroups) {
  std::set<std::vector<Index>> members;
  for (auto const& h : subgroups) {
    std::vector<Index> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    if (!is_subgroup(group, sorted))
      throw Error(ErrorCode::NotASubgroup, "family member is not a subgroup");
    members.insert(std::move(sorted));
  }
  for (auto const& h : members) {
    for (Index g = 0; g < group.size(); ++g) {
      Index g_inv = inverse(group, g);
      std::vector<Index> conj;
      for (Index x : h) conj.push_back(group.mul(group.mul(g, x), g_inv));
      std::sort(conj.begin(), conj.end());
      if (!members.contains(conj)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Index>> left_cosets(FiniteMonoid const& group,
                                            std::vector<Index> const& subgroup) {
  if (!is_subgroup(group, subgroup))
    throw Error(ErrorCode::NotASubgroup, "left_cosets: not a subgroup");
  std::vector<bool> covered(group.size(), false);
  std::vector<std::vector<Index>> cosets;
  for (Index g = 0; g < group.size(); ++g) {
    if (covered[g]) continue;
    std::vector<Index> coset;
    for (Index h : subgroup) coset.push_back(group.mul(g, h));
    std::sort(coset.begin(), coset.end());
    for (Index x : coset) covered[x] = true;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace symrep
