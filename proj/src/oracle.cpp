#include "symrep/oracle.hpp"

#include <algorithm>
#include <functional>

namespace symrep {

std::vector<FinMSet> enumerate_msets(FiniteMonoid const& monoid, std::size_t size) {
  std::size_t n = monoid.size();
  std::vector<Index> action(n * size, 0);
  Index e = monoid.identity();
  for (Index a = 0; a < size; ++a) action[e * size + a] = a;
  std::vector<bool> done(n, false);
  done[e] = true;

  auto rows_compatible = [&]() {
    for (Index m = 0; m < n; ++m) {
      if (!done[m]) continue;
      for (Index k = 0; k < n; ++k) {
        Index mk = monoid.mul(m, k);
        if (!done[k] || !done[mk]) continue;
        for (Index a = 0; a < size; ++a)
          if (action[mk * size + a] != action[m * size + action[k * size + a]]) return false;
      }
    }
    return true;
  };

  std::vector<FinMSet> out;
  std::function<void(Index, Index)> fill = [&](Index m, Index a) {
    if (m == n) {
      out.push_back(FinMSet::from_flat(monoid, size, action));
      return;
    }
    if (m == e) {
      fill(m + 1, 0);
      return;
    }
    if (a == size) {
      done[m] = true;
      if (rows_compatible()) fill(m + 1, 0);
      done[m] = false;
      return;
    }
    for (Index v = 0; v < size; ++v) {
      action[m * size + a] = v;
      fill(m, a + 1);
    }
  };
  fill(0, 0);
  return out;
}

std::vector<FiniteMonoid> small_groups(std::size_t max_order, Bounds const& bounds) {
  std::vector<FiniteMonoid> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto& m : enumerate_monoids(n, bounds))
      if (is_group(m)) out.push_back(std::move(m));
  return out;
}

std::vector<OracleCheck> run_oracles(std::size_t max_order, std::size_t max_points,
                                     Bounds const& bounds) {
  OracleCheck universal{"universal-property"};
  OracleCheck rinv_oracle{"rinv-bruteforce"};
  OracleCheck right_adj{"adjunction-right"};
  OracleCheck left_adj{"adjunction-left"};
  OracleCheck ind_res{"induce-restrict"};
  OracleCheck res_coind{"restrict-coinduce"};

  auto record = [](OracleCheck& check, bool ok) {
    ++check.cases;
    if (!ok) ++check.failures;
  };

  auto groups = small_groups(std::min<std::size_t>(4, bounds.max_enum_order), bounds);
  for (std::size_t order = 1; order <= max_order; ++order) {
    for (auto const& monoid : enumerate_monoids(order, bounds)) {
      GroupCompletion gc = group_completion(monoid);
      record(universal, verify_universal_property(gc, groups, bounds));

      std::vector<FinMSet> corpus;
      for (std::size_t s = 0; s <= max_points; ++s)
        for (auto& a : enumerate_msets(monoid, s)) corpus.push_back(std::move(a));

      std::vector<FinMSet> symmetric;
      for (auto const& h : all_subgroups(gc.group, bounds).subgroups)
        symmetric.push_back(coset_gset(gc.group, h));

      for (auto const& a : corpus) {
        RinvResult fast = rinv(gc, a);
        RinvResult slow = rinv_bruteforce(gc, a, bounds);
        auto fast_image = fast.counit.mapping;
        auto slow_image = slow.counit.mapping;
        std::sort(slow_image.begin(), slow_image.end());
        record(rinv_oracle, fast_image == slow_image && isomorphic(fast.gset, slow.gset, bounds));
        for (auto const& b : symmetric) {
          record(right_adj, adjunction_check_right(gc, b, a, bounds).bijective);
          record(left_adj, adjunction_check_left(gc, b, a, bounds).bijective);
        }
      }

      for (auto const& n : all_submonoids(monoid, bounds)) {
        for (std::size_t s = 0; s <= std::min<std::size_t>(max_points, 2); ++s) {
          for (auto const& a : enumerate_msets(n.embedded, s)) {
            Induced ind = induce(n, a);
            Coinduced coind = coinduce(n, a, bounds);
            for (auto const& x : corpus) {
              if (x.size() > 2) continue;
              std::size_t lhs = equivariant_mappings(ind.mset, x, bounds).size();
              std::size_t rhs = equivariant_mappings(a, restrict(x, n), bounds).size();
              record(ind_res, lhs == rhs);
              std::size_t lhs2 = equivariant_mappings(restrict(x, n), a, bounds).size();
              std::size_t rhs2 = equivariant_mappings(x, coind.mset, bounds).size();
              record(res_coind, lhs2 == rhs2);
            }
          }
        }
      }
    }
  }
  return {universal, rinv_oracle, right_adj, left_adj, ind_res, res_coind};
}

}  // namespace symrep
