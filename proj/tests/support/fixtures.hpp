#pragma once

#include <random>
#include <string>
#include <vector>

#include "symrep/dynamics.hpp"
#include "symrep/mset.hpp"

namespace fixtures {

using symrep::FiniteMonoid;
using symrep::FinMSet;
using symrep::FunctionalGraph;

FiniteMonoid trivial();
FiniteMonoid e2();      // {1, a}, a² = a
FiniteMonoid t3();      // {1, a, a²}, a³ = a
FiniteMonoid cyclic(std::size_t n);
FiniteMonoid s3();
FiniteMonoid v4();
FiniteMonoid full_transformations(std::size_t n);  // all maps n -> n, (f*g)(x) = f(g(x))

FinMSet a_xy();      // E2 on {x, y}: a·x = x, a·y = x
FinMSet t3_swap();   // a swaps, a² fixes
FunctionalGraph rho5();

struct Named {
  std::string name;
  FinMSet mset;
};

/// Every built-in M-set fixture.
std::vector<Named> mset_fixtures();
/// The symmetric ones.
std::vector<Named> symmetric_fixtures();
/// Every built-in monoid.
std::vector<FiniteMonoid> monoid_fixtures();

/// A uniformly chosen action of a uniformly chosen monoid of order <= max_order
/// on at most max_points points.
FinMSet random_mset(std::mt19937& rng, std::size_t max_order, std::size_t max_points);
FunctionalGraph random_graph(std::mt19937& rng, std::size_t max_states);

}  // namespace fixtures
