#pragma once

#include <string>
#include <vector>

#include "symrep/kan.hpp"

namespace symrep {

/// Every action of `monoid` on {0, ..., size-1}, in lexicographic order of the
/// flattened action table.
std::vector<FinMSet> enumerate_msets(FiniteMonoid const& monoid, std::size_t size);

/// Group tables among enumerate_monoids(n) for n = 1..max_order.
std::vector<FiniteMonoid> small_groups(std::size_t max_order, Bounds const& bounds = {});

struct OracleCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

/// The brute-force suites behind the `oracle` command: universal property of
/// the completion, ℛ against its definitional enumeration, both adjunctions
/// of q*, and Ind ⊣ Res ⊣ Coind hom counts, over all monoids of order
/// <= max_order and all their M-sets with <= max_points points.
std::vector<OracleCheck> run_oracles(std::size_t max_order, std::size_t max_points,
                                     Bounds const& bounds = {});

}  // namespace symrep
