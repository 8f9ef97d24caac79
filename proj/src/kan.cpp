#include "symrep/kan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symrep/detail/union_find.hpp"

namespace symrep {
namespace {

constexpr Index kMissing = static_cast<Index>(-1);

std::vector<Index> inverse_positions(std::vector<Index> const& values, std::size_t universe) {
  std::vector<Index> pos(universe, kMissing);
  for (Index i = 0; i < values.size(); ++i) pos[values[i]] = i;
  return pos;
}

VerdictEntry compare_fixed(FinMSet const& source_gset, FinMSet const& target_gset,
                           std::vector<Index> const& map_on_gsets,
                           std::vector<Index> const& submonoid,
                           std::vector<Index> const& subgroup) {
  VerdictEntry entry;
  entry.submonoid = submonoid;
  entry.subgroup = subgroup;
  entry.source_fixed = fixed_points(source_gset, subgroup);
  entry.target_fixed = fixed_points(target_gset, subgroup);
  auto target_pos = inverse_positions(entry.target_fixed, target_gset.size());
  for (Index x : entry.source_fixed) entry.induced.push_back(target_pos[map_on_gsets[x]]);
  entry.bijective = is_bijective(entry.induced, entry.target_fixed.size());
  return entry;
}

}  // namespace

FinMSet qstar(GroupCompletion const& completion, FinMSet const& b) {
  if (!(b.monoid() == completion.group))
    throw Error(ErrorCode::CompletionMismatch, "qstar: set is not over the completion group");
  std::vector<Index> action;
  action.reserve(completion.monoid.size() * b.size());
  for (Index m = 0; m < completion.monoid.size(); ++m) {
    auto row = b.row(completion(m));
    action.insert(action.end(), row.begin(), row.end());
  }
  return FinMSet::from_flat(completion.monoid, b.size(), std::move(action), b.names());
}

RinvResult rinv(GroupCompletion const& completion, FinMSet const& a) {
  if (!(a.monoid() == completion.monoid))
    throw Error(ErrorCode::CompletionMismatch, "rinv: M-set is not over the completed monoid");
  FiniteMonoid const& monoid = completion.monoid;
  std::vector<Index> support;
  for (Index x = 0; x < a.size(); ++x) {
    bool well_defined = true;
    for (Index m = 0; m < monoid.size() && well_defined; ++m)
      for (Index n = m + 1; n < monoid.size() && well_defined; ++n)
        if (completion(m) == completion(n) && a.act(m, x) != a.act(n, x)) well_defined = false;
    if (well_defined) support.push_back(x);
  }
  auto pos = inverse_positions(support, a.size());
  FiniteMonoid const& group = completion.group;
  std::vector<Index> action(group.size() * support.size());
  for (Index g = 0; g < group.size(); ++g) {
    Index m = completion.lift(g);
    for (Index i = 0; i < support.size(); ++i) action[g * support.size() + i] = pos[a.act(m, support[i])];
  }
  std::vector<std::string> names;
  if (!a.names().empty())
    for (Index x : support) names.push_back(a.names()[x]);
  FinMSet gset = FinMSet::from_flat(group, support.size(), std::move(action), std::move(names));
  EqMap counit = make_eqmap(qstar(completion, gset), a, support);
  return RinvResult{completion, std::move(gset), std::move(counit)};
}

RinvResult rinv_bruteforce(GroupCompletion const& completion, FinMSet const& a,
                           Bounds const& bounds) {
  if (!(a.monoid() == completion.monoid))
    throw Error(ErrorCode::CompletionMismatch, "rinv_bruteforce: M-set is not over the completed monoid");
  FiniteMonoid const& group = completion.group;
  // Count all functions G -> A, not just the equivariant ones.
  {
    std::size_t total = 1;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (a.size() != 0 && total > bounds.max_enum / a.size())
        throw Error(ErrorCode::SizeBoundExceeded,
                    "rinv_bruteforce: |A|^|G| exceeds bound " + std::to_string(bounds.max_enum));
      total *= a.size();
    }
  }
  FinMSet group_as_mset = qstar(completion, regular_mset(group));
  auto sigmas = equivariant_mappings(group_as_mset, a, bounds);
  std::map<std::vector<Index>, Index> position;
  for (Index i = 0; i < sigmas.size(); ++i) position.emplace(sigmas[i], i);
  std::size_t count = sigmas.size();
  std::vector<Index> action(group.size() * count);
  std::vector<Index> shifted(group.size());
  for (Index g = 0; g < group.size(); ++g)
    for (Index i = 0; i < count; ++i) {
      for (Index h = 0; h < group.size(); ++h) shifted[h] = sigmas[i][group.mul(h, g)];
      action[g * count + i] = position.at(shifted);
    }
  FinMSet gset = FinMSet::from_flat(group, count, std::move(action));
  std::vector<Index> counit(count);
  for (Index i = 0; i < count; ++i) counit[i] = sigmas[i][group.identity()];
  EqMap counit_map = make_eqmap(qstar(completion, gset), a, std::move(counit));
  return RinvResult{completion, std::move(gset), std::move(counit_map)};
}

LinvResult linv(GroupCompletion const& completion, FinMSet const& a) {
  if (!(a.monoid() == completion.monoid))
    throw Error(ErrorCode::CompletionMismatch, "linv: M-set is not over the completed monoid");
  FiniteMonoid const& monoid = completion.monoid;
  FiniteMonoid const& group = completion.group;
  std::size_t const na = a.size();
  auto code = [na](Index g, Index x) { return g * na + x; };
  detail::UnionFind uf(group.size() * na);
  for (Index g = 0; g < group.size(); ++g)
    for (Index m = 0; m < monoid.size(); ++m)
      for (Index x = 0; x < na; ++x)
        uf.unite(code(g, a.act(m, x)), code(group.mul(g, completion(m)), x));
  auto [label, count] = detail::number_classes(uf.representatives());
  std::vector<Index> rep_code(count);
  for (Index c = label.size(); c-- > 0;) rep_code[label[c]] = c;
  std::vector<Index> action(group.size() * count);
  for (Index k = 0; k < group.size(); ++k)
    for (Index p = 0; p < count; ++p) {
      Index c = rep_code[p];
      action[k * count + p] = label[code(group.mul(k, c / na), c % na)];
    }
  FinMSet gset = FinMSet::from_flat(group, count, std::move(action));
  std::vector<Index> unit(na);
  for (Index x = 0; x < na; ++x) unit[x] = label[code(group.identity(), x)];
  EqMap unit_map = make_eqmap(a, qstar(completion, gset), std::move(unit));
  return LinvResult{completion, std::move(gset), std::move(unit_map)};
}

RinvResult rinv_rel(Submonoid const& n, FinMSet const& a) {
  return rinv(group_completion(n.embedded), restrict(a, n));
}

LinvResult linv_rel(Submonoid const& n, FinMSet const& a) {
  return linv(group_completion(n.embedded), restrict(a, n));
}

EqMap rinv_map(RinvResult const& source, RinvResult const& target, EqMap const& f) {
  if (!(source.gset.monoid() == target.gset.monoid()) || !(f.source == source.counit.target) ||
      !(f.target == target.counit.target))
    throw Error(ErrorCode::CompletionMismatch, "rinv_map: map does not match the replacements");
  auto pos = inverse_positions(target.counit.mapping, f.target.size());
  std::vector<Index> mapping(source.gset.size());
  for (Index i = 0; i < mapping.size(); ++i) {
    Index image = pos[f(source.counit(i))];
    if (image == kMissing)
      throw Error(ErrorCode::NotEquivariant, "rinv_map: image leaves the symmetric subset");
    mapping[i] = image;
  }
  return make_eqmap(source.gset, target.gset, std::move(mapping));
}

EqMap linv_map(LinvResult const& source, LinvResult const& target, EqMap const& f) {
  if (!(source.gset.monoid() == target.gset.monoid()) || !(f.source == source.unit.source) ||
      !(f.target == target.unit.source))
    throw Error(ErrorCode::CompletionMismatch, "linv_map: map does not match the replacements");
  FiniteMonoid const& group = source.gset.monoid();
  std::vector<Index> mapping(source.gset.size(), kMissing);
  // Every point is g·[1, a]; send it to g·[1, f(a)].
  for (Index g = 0; g < group.size(); ++g)
    for (Index x = 0; x < f.source.size(); ++x) {
      Index p = source.gset.act(g, source.unit(x));
      if (mapping[p] == kMissing) mapping[p] = target.gset.act(g, target.unit(f(x)));
    }
  return make_eqmap(source.gset, target.gset, std::move(mapping));
}

// ---------------------------------------------------------------------------
// Families and verdicts

void validate_family(FamilyZY const& family) {
  std::set<std::vector<Index>> seen;
  for (auto const& entry : family.entries) {
    if (!(entry.submonoid.parent == family.monoid))
      throw Error(ErrorCode::FamilyInvalid, "family entry over a different monoid");
    if (!seen.insert(entry.submonoid.elements).second)
      throw Error(ErrorCode::FamilyInvalid, "submonoid listed twice");
    if (!(entry.completion.monoid == entry.submonoid.embedded))
      throw Error(ErrorCode::FamilyInvalid, "completion does not belong to the submonoid");
    try {
      if (!is_conjugacy_closed(entry.completion.group, entry.subgroups))
        throw Error(ErrorCode::FamilyInvalid, "subgroup list is not closed under conjugation");
    } catch (Error const& e) {
      if (e.code() == ErrorCode::FamilyInvalid) throw;
      throw Error(ErrorCode::FamilyInvalid, e.what());
    }
  }
}

FamilyZY make_family(FiniteMonoid const& monoid, std::vector<FamilySpec> const& specs,
                     Bounds const& bounds) {
  FamilyZY family{monoid, {}};
  for (auto const& spec : specs) {
    try {
      Submonoid n = make_submonoid(monoid, spec.submonoid);
      GroupCompletion gc = group_completion(n.embedded);
      std::vector<std::vector<Index>> subgroups;
      if (spec.subgroups) {
        for (auto h : *spec.subgroups) {
          std::sort(h.begin(), h.end());
          h.erase(std::unique(h.begin(), h.end()), h.end());
          if (!is_subgroup(gc.group, h))
            throw Error(ErrorCode::FamilyInvalid, "listed subset is not a subgroup of G(N)");
          subgroups.push_back(std::move(h));
        }
        std::sort(subgroups.begin(), subgroups.end(), subset_order);
        subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());
      } else {
        subgroups = all_subgroups(gc.group, bounds).subgroups;
      }
      family.entries.push_back(FamilyEntry{std::move(n), std::move(gc), std::move(subgroups)});
    } catch (Error const& e) {
      if (e.code() == ErrorCode::FamilyInvalid) throw;
      throw Error(ErrorCode::FamilyInvalid, e.what());
    }
  }
  validate_family(family);
  return family;
}

FamilyZY full_family(FiniteMonoid const& monoid, Bounds const& bounds) {
  std::vector<FamilySpec> specs;
  for (auto const& n : all_submonoids(monoid, bounds)) specs.push_back({n.elements, std::nullopt});
  return make_family(monoid, specs, bounds);
}

Verdict equivalence(EqMap const& f, FamilyZY const& family, Side side) {
  if (!(f.source.monoid() == family.monoid))
    throw Error(ErrorCode::FamilyInvalid, "map and family are over different monoids");
  Verdict verdict{true, {}};
  for (auto const& entry : family.entries) {
    FinMSet res_source = restrict(f.source, entry.submonoid);
    FinMSet res_target = restrict(f.target, entry.submonoid);
    EqMap res_f{res_source, res_target, f.mapping};
    FinMSet source_gset = point_mset(entry.completion.group);
    FinMSet target_gset = source_gset;
    std::vector<Index> induced;
    if (side == Side::Right) {
      RinvResult rs = rinv(entry.completion, res_source);
      RinvResult rt = rinv(entry.completion, res_target);
      induced = rinv_map(rs, rt, res_f).mapping;
      source_gset = rs.gset;
      target_gset = rt.gset;
    } else {
      LinvResult ls = linv(entry.completion, res_source);
      LinvResult lt = linv(entry.completion, res_target);
      induced = linv_map(ls, lt, res_f).mapping;
      source_gset = ls.gset;
      target_gset = lt.gset;
    }
    for (auto const& h : entry.subgroups) {
      VerdictEntry e = compare_fixed(source_gset, target_gset, induced, entry.submonoid.elements, h);
      verdict.equivalence = verdict.equivalence && e.bijective;
      verdict.entries.push_back(std::move(e));
    }
  }
  return verdict;
}

Verdict right_equivalence(EqMap const& f, FamilyZY const& family) {
  return equivalence(f, family, Side::Right);
}

Verdict left_equivalence(EqMap const& f, FamilyZY const& family) {
  return equivalence(f, family, Side::Left);
}

// ---------------------------------------------------------------------------
// Generating objects

FinMSet coset_gset(FiniteMonoid const& group, std::vector<Index> const& subgroup) {
  auto cosets = left_cosets(group, subgroup);
  std::vector<Index> coset_of(group.size());
  for (Index c = 0; c < cosets.size(); ++c)
    for (Index g : cosets[c]) coset_of[g] = c;
  std::vector<Index> action(group.size() * cosets.size());
  for (Index g = 0; g < group.size(); ++g)
    for (Index c = 0; c < cosets.size(); ++c)
      action[g * cosets.size() + c] = coset_of[group.mul(g, cosets[c].front())];
  return FinMSet::from_flat(group, cosets.size(), std::move(action));
}

GeneratingObject generating_object(Submonoid const& n, std::vector<Index> const& subgroup) {
  GroupCompletion gc = group_completion(n.embedded);
  std::vector<Index> h = subgroup;
  std::sort(h.begin(), h.end());
  if (!is_subgroup(gc.group, h))
    throw Error(ErrorCode::NotASubgroup, "generating_object: H is not a subgroup of G(N)");
  FinMSet cosets = coset_gset(gc.group, h);
  Induced induced = induce(n, qstar(gc, cosets));
  // Base point [1, H]: the coset holding the identity.
  Index base_coset = 0;
  for (auto const& c : left_cosets(gc.group, h)) {
    if (std::binary_search(c.begin(), c.end(), gc.group.identity())) break;
    ++base_coset;
  }
  Index base = induced.unit(base_coset);
  return GeneratingObject{std::move(induced.mset), base, std::move(gc)};
}

// ---------------------------------------------------------------------------
// Adjunctions

AdjunctionCheck adjunction_check_right(GroupCompletion const& completion, FinMSet const& b,
                                       FinMSet const& a, Bounds const& bounds) {
  RinvResult r = rinv(completion, a);
  auto group_side = equivariant_mappings(b, r.gset, bounds);
  auto monoid_side = equivariant_mappings(qstar(completion, b), a, bounds);
  std::set<std::vector<Index>> images;
  for (auto const& phi : group_side) {
    std::vector<Index> composite(b.size());
    for (Index y = 0; y < b.size(); ++y) composite[y] = r.counit(phi[y]);
    images.insert(std::move(composite));
  }
  std::set<std::vector<Index>> targets(monoid_side.begin(), monoid_side.end());
  bool bijective = images.size() == group_side.size() && images == targets;
  return AdjunctionCheck{group_side.size(), monoid_side.size(), bijective};
}

AdjunctionCheck adjunction_check_left(GroupCompletion const& completion, FinMSet const& b,
                                      FinMSet const& a, Bounds const& bounds) {
  LinvResult l = linv(completion, a);
  auto group_side = equivariant_mappings(l.gset, b, bounds);
  auto monoid_side = equivariant_mappings(a, qstar(completion, b), bounds);
  std::set<std::vector<Index>> images;
  for (auto const& psi : group_side) {
    std::vector<Index> composite(a.size());
    for (Index x = 0; x < a.size(); ++x) composite[x] = psi[l.unit(x)];
    images.insert(std::move(composite));
  }
  std::set<std::vector<Index>> targets(monoid_side.begin(), monoid_side.end());
  bool bijective = images.size() == group_side.size() && images == targets;
  return AdjunctionCheck{group_side.size(), monoid_side.size(), bijective};
}

std::vector<std::vector<Index>> counit_factorizations(RinvResult const& r, FinMSet const& b,
                                                      std::vector<Index> const& g,
                                                      Bounds const& bounds) {
  std::vector<std::vector<Index>> out;
  for (auto& phi : equivariant_mappings(b, r.gset, bounds)) {
    bool matches = true;
    for (Index y = 0; y < b.size() && matches; ++y) matches = r.counit(phi[y]) == g[y];
    if (matches) out.push_back(std::move(phi));
  }
  return out;
}

std::vector<std::vector<Index>> unit_factorizations(LinvResult const& l, FinMSet const& b,
                                                    std::vector<Index> const& g,
                                                    Bounds const& bounds) {
  std::vector<std::vector<Index>> out;
  for (auto& psi : equivariant_mappings(l.gset, b, bounds)) {
    bool matches = true;
    for (Index x = 0; x < g.size() && matches; ++x) matches = psi[l.unit(x)] == g[x];
    if (matches) out.push_back(std::move(psi));
  }
  return out;
}

}  // namespace symrep
