#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "symrep/oracle.hpp"

namespace fixtures {

using symrep::Index;

FiniteMonoid trivial() { return FiniteMonoid::from_table({{0}}, 0); }

FiniteMonoid e2() { return FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0, {"1", "a"}); }

FiniteMonoid t3() {
  return FiniteMonoid::from_table({{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}, 0, {"1", "a", "a2"});
}

FiniteMonoid cyclic(std::size_t n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteMonoid::from_table(t, 0);
}

namespace {

std::vector<std::vector<Index>> permutations(std::size_t n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Index>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Composition table (f*g)(x) = f(g(x)) of a list of maps closed under it.
FiniteMonoid composition_monoid(std::vector<std::vector<Index>> const& maps) {
  std::map<std::vector<Index>, Index> index;
  for (Index i = 0; i < maps.size(); ++i) index[maps[i]] = i;
  std::size_t n = maps.front().size();
  std::vector<Index> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Index>> t(maps.size(), std::vector<Index>(maps.size()));
  for (Index f = 0; f < maps.size(); ++f)
    for (Index g = 0; g < maps.size(); ++g) {
      std::vector<Index> fg(n);
      for (Index x = 0; x < n; ++x) fg[x] = maps[f][maps[g][x]];
      t[f][g] = index.at(fg);
    }
  return FiniteMonoid::from_table(t, index.at(id));
}

// The monoid acting on {0..n-1} through its own elements as maps.
FinMSet natural_action(FiniteMonoid const& m, std::vector<std::vector<Index>> const& maps) {
  return FinMSet::from_table(m, maps);
}

}  // namespace

FiniteMonoid s3() { return composition_monoid(permutations(3)); }

FiniteMonoid v4() {
  std::vector<std::vector<Index>> t(4, std::vector<Index>(4));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteMonoid::from_table(t, 0);
}

FiniteMonoid full_transformations(std::size_t n) {
  std::vector<std::vector<Index>> maps;
  std::vector<Index> f(n, 0);
  while (true) {
    maps.push_back(f);
    std::size_t k = n;
    while (k > 0 && f[k - 1] + 1 == n) f[--k] = 0;
    if (k == 0) break;
    ++f[k - 1];
  }
  return composition_monoid(maps);
}

FinMSet a_xy() { return FinMSet::from_table(e2(), {{0, 1}, {0, 0}}, {"x", "y"}); }

FinMSet t3_swap() { return FinMSet::from_table(t3(), {{0, 1}, {1, 0}, {0, 1}}); }

FunctionalGraph rho5() { return symrep::make_functional_graph({1, 2, 0, 2, 3}); }

std::vector<Named> mset_fixtures() {
  std::vector<Named> out = {
      {"a_xy", a_xy()},
      {"e2_point", symrep::point_mset(e2())},
      {"e2_regular", symrep::regular_mset(e2())},
      {"e2_empty", symrep::empty_mset(e2())},
      {"t3_swap", t3_swap()},
      {"t3_regular", symrep::regular_mset(t3())},
      {"t3_trivial2", symrep::trivial_mset(t3(), 2)},
      {"t3_fix_swap", FinMSet::from_table(t3(), {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}})},
  };
  for (std::size_t n : {2, 3, 4}) out.push_back({"c" + std::to_string(n) + "_regular", symrep::regular_mset(cyclic(n))});
  out.push_back({"c4_mod2", FinMSet::from_table(cyclic(4), {{0, 1}, {1, 0}, {0, 1}, {1, 0}})});
  out.push_back({"s3_natural", natural_action(s3(), permutations(3))});
  out.push_back({"s3_regular", symrep::regular_mset(s3())});
  out.push_back({"v4_regular", symrep::regular_mset(v4())});
  {
    FiniteMonoid t2 = full_transformations(2);
    std::vector<std::vector<Index>> maps = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    out.push_back({"t2_natural", natural_action(t2, maps)});
    out.push_back({"t2_regular", symrep::regular_mset(t2)});
  }
  return out;
}

std::vector<Named> symmetric_fixtures() {
  std::vector<Named> out;
  for (auto& f : mset_fixtures())
    if (symrep::is_symmetric(f.mset)) out.push_back(std::move(f));
  return out;
}

std::vector<FiniteMonoid> monoid_fixtures() {
  return {trivial(), e2(), t3(), cyclic(2), cyclic(3), cyclic(4), s3(), v4(), full_transformations(2)};
}

FinMSet random_mset(std::mt19937& rng, std::size_t max_order, std::size_t max_points) {
  static std::map<std::size_t, std::vector<FiniteMonoid>> monoids;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<FinMSet>> actions;
  std::size_t order = std::uniform_int_distribution<std::size_t>(1, max_order)(rng);
  auto& ms = monoids[order];
  if (ms.empty()) ms = symrep::enumerate_monoids(order);
  std::size_t which = std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng);
  std::size_t points = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  auto& as = actions[{order * 1000 + which, points}];
  if (as.empty()) as = symrep::enumerate_msets(ms[which], points);
  return as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)];
}

FunctionalGraph random_graph(std::mt19937& rng, std::size_t max_states) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Index> step(n);
  for (auto& s : step) s = pick(rng);
  return symrep::make_functional_graph(std::move(step));
}

}  // namespace fixtures
