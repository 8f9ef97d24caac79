#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "symrep/monoid.hpp"

using namespace symrep;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("validate_monoid") {
  FiniteMonoid t = validate_monoid({{0}}, 0);
  CHECK(t.size() == 1);
  CHECK(validate_monoid({{0, 1}, {1, 1}}, 0) == fixtures::e2());

  // 0 is the identity; 1*1 = 2, 1*2 = 0, 2*1 = 1 breaks (1*1)*1 = 1*(1*1).
  std::vector<std::vector<Index>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 1, 2}};
  try {
    validate_monoid(bad, 0);
    FAIL("accepted a non-associative table");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    REQUIRE(e.witness().size() == 3);
    auto w = e.witness();
    CHECK(bad[bad[w[0]][w[1]]][w[2]] != bad[w[0]][bad[w[1]][w[2]]]);
  }
  CHECK(code_of([] { validate_monoid({{0, 1}, {1, 1}}, 1); }) == ErrorCode::BadIdentity);
  CHECK(code_of([] { validate_monoid({{0, 1}, {1, 2}}, 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { validate_monoid({{0, 1}, {1}}, 0); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] { validate_monoid({{0}}, 3); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("identity at a non-zero index") {
  FiniteMonoid m = validate_monoid({{0, 0}, {0, 1}}, 1);
  CHECK(m.identity() == 1);
  CHECK(idempotents(m) == std::vector<Index>{0, 1});
}

TEST_CASE("submonoid_generated") {
  FiniteMonoid t3 = fixtures::t3();
  CHECK(submonoid_generated(t3, {}).elements == std::vector<Index>{0});
  CHECK(submonoid_generated(t3, {2}).elements == std::vector<Index>{0, 2});
  CHECK(submonoid_generated(t3, {1}).elements == std::vector<Index>{0, 1, 2});
  CHECK(submonoid_generated(fixtures::cyclic(2), {1}).elements == std::vector<Index>{0, 1});
  CHECK(code_of([&] { submonoid_generated(t3, {5}); }) == ErrorCode::IndexOutOfRange);

  Submonoid n = submonoid_generated(t3, {2});
  CHECK(n.embedded.size() == 2);
  CHECK(is_hom(n.embedded, t3, n.inclusion.mapping));
  CHECK(n.local_index(2) == 1);
  CHECK(n.contains(2));
  CHECK_FALSE(n.contains(1));
}

TEST_CASE("make_submonoid rejects non-submonoids") {
  FiniteMonoid t3 = fixtures::t3();
  CHECK(code_of([&] { make_submonoid(t3, {0, 1}); }) == ErrorCode::SubmonoidMismatch);
  CHECK(code_of([&] { make_submonoid(t3, {2}); }) == ErrorCode::SubmonoidMismatch);
  CHECK(make_submonoid(t3, {2, 0}).elements == std::vector<Index>{0, 2});
}

TEST_CASE("all_submonoids") {
  auto elements = [](FiniteMonoid const& m) {
    std::vector<std::vector<Index>> out;
    for (auto const& s : all_submonoids(m)) out.push_back(s.elements);
    return out;
  };
  CHECK(elements(fixtures::trivial()) == std::vector<std::vector<Index>>{{0}});
  CHECK(elements(fixtures::e2()) == std::vector<std::vector<Index>>{{0}, {0, 1}});
  CHECK(elements(fixtures::t3()) == std::vector<std::vector<Index>>{{0}, {0, 2}, {0, 1, 2}});
  for (auto const& m : fixtures::monoid_fixtures()) {
    CAPTURE(m.size());
    CHECK(elements(m) == oracles::naive_submonoids(m));
    auto subs = all_submonoids(m);
    CHECK(subs.front().is_trivial());
    CHECK(subs.back().is_full());
  }
  Bounds tight;
  tight.max_submonoid_order = 2;
  CHECK(code_of([&] { all_submonoids(fixtures::t3(), tight); }) == ErrorCode::SizeBoundExceeded);
}

TEST_CASE("idempotents") {
  CHECK(idempotents(fixtures::cyclic(4)) == std::vector<Index>{0});
  CHECK(idempotents(fixtures::s3()) == std::vector<Index>{0});
  CHECK(idempotents(fixtures::e2()) == std::vector<Index>{0, 1});
  CHECK(idempotents(fixtures::t3()) == std::vector<Index>{0, 2});
}

TEST_CASE("index_period") {
  CHECK(index_period(fixtures::t3(), 0) == IndexPeriod{0, 1});
  CHECK(index_period(fixtures::e2(), 1) == IndexPeriod{1, 1});
  CHECK(index_period(fixtures::t3(), 1) == IndexPeriod{1, 2});
  CHECK(index_period(fixtures::cyclic(4), 1) == IndexPeriod{0, 4});
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto const& m : enumerate_monoids(n))
      for (Index x = 0; x < m.size(); ++x) {
        IndexPeriod ip = index_period(m, x);
        auto [k, p] = oracles::naive_index_period(m, x);
        CHECK(ip.index == k);
        CHECK(ip.period == p);
        CHECK(m.power(x, ip.index + ip.period) == m.power(x, ip.index));
      }
}

TEST_CASE("congruence_closure") {
  FiniteMonoid t3 = fixtures::t3();
  CHECK(congruence_closure(t3, {}).classes() == std::vector<std::vector<Index>>{{0}, {1}, {2}});
  CHECK(congruence_closure(t3, {{2, 0}}).classes() == std::vector<std::vector<Index>>{{0, 2}, {1}});
  CHECK(congruence_closure(fixtures::e2(), {{1, 0}}).classes() == std::vector<std::vector<Index>>{{0, 1}});
  CHECK(code_of([&] { congruence_closure(t3, {{0, 9}}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("quotient_monoid") {
  FiniteMonoid t3 = fixtures::t3();
  QuotientMonoid id = quotient_monoid(t3, congruence_closure(t3, {}));
  CHECK(id.monoid == t3);
  CHECK(id.projection.mapping == std::vector<Index>{0, 1, 2});

  QuotientMonoid q = quotient_monoid(t3, congruence_closure(t3, {{2, 0}}));
  CHECK(q.monoid == fixtures::cyclic(2));
  CHECK(q.projection.mapping == std::vector<Index>{0, 1, 0});
  CHECK(quotient_monoid(fixtures::e2(), congruence_closure(fixtures::e2(), {{1, 0}})).monoid.size() == 1);

  // Identity placed last: the quotient still puts it at index 0.
  FiniteMonoid m = validate_monoid({{0, 0}, {0, 1}}, 1);
  QuotientMonoid qm = quotient_monoid(m, congruence_closure(m, {}));
  CHECK(qm.monoid.identity() == 0);
  CHECK(qm.projection.mapping == std::vector<Index>{1, 0});
}

TEST_CASE("congruences on random pair sets") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto const& m : enumerate_monoids(n)) {
      std::uniform_int_distribution<Index> pick(0, n - 1);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::pair<Index, Index>> pairs;
        for (int i = 0; i < 2; ++i) pairs.emplace_back(pick(rng), pick(rng));
        Congruence small = congruence_closure(m, {pairs.front()});
        Congruence big = congruence_closure(m, pairs);
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) {
            if (small.related(a, b)) CHECK(big.related(a, b));
            if (big.related(a, b))
              for (Index c = 0; c < n; ++c) {
                CHECK(big.related(m.mul(a, c), m.mul(b, c)));
                CHECK(big.related(m.mul(c, a), m.mul(c, b)));
              }
          }
        for (auto [a, b] : pairs) CHECK(big.related(a, b));
        QuotientMonoid q = quotient_monoid(m, big);
        CHECK(oracles::naive_is_monoid(q.monoid.table(), q.monoid.identity()));
        CHECK(is_hom(m, q.monoid, q.projection.mapping));
        CHECK(q.monoid.size() == big.classes().size());
      }
    }
}

TEST_CASE("monoid_homs") {
  CHECK(monoid_homs(fixtures::trivial(), fixtures::s3()).size() == 1);
  auto e2c2 = monoid_homs(fixtures::e2(), fixtures::cyclic(2));
  REQUIRE(e2c2.size() == 1);
  CHECK(e2c2.front().mapping == std::vector<Index>{0, 0});
  CHECK(monoid_homs(fixtures::cyclic(2), fixtures::cyclic(2)).size() == 2);
  for (auto const& a : fixtures::monoid_fixtures())
    for (auto const& b : {fixtures::e2(), fixtures::t3(), fixtures::cyclic(2), fixtures::cyclic(3)}) {
      if (a.size() > 6) continue;
      auto homs = monoid_homs(a, b);
      CHECK(homs.size() == oracles::naive_hom_count(a, b));
      CHECK(std::is_sorted(homs.begin(), homs.end(),
                           [](auto const& x, auto const& y) { return x.mapping < y.mapping; }));
    }
  Bounds tight;
  tight.max_hom_order = 3;
  CHECK(code_of([&] { monoid_homs(fixtures::cyclic(4), fixtures::e2(), tight); }) ==
        ErrorCode::SizeBoundExceeded);
}

TEST_CASE("make_hom and compose") {
  FiniteMonoid t3 = fixtures::t3();
  FiniteMonoid c2 = fixtures::cyclic(2);
  MonoidHom f = make_hom(t3, c2, {0, 1, 0});
  MonoidHom g = make_hom(c2, c2, {0, 1});
  CHECK(compose(g, f).mapping == f.mapping);
  CHECK(code_of([&] { make_hom(t3, c2, {0, 1, 1}); }) == ErrorCode::InvalidHom);
  CHECK(code_of([&] { make_hom(t3, c2, {0, 1}); }) == ErrorCode::InvalidHom);
  CHECK(code_of([&] { compose(f, f); }) == ErrorCode::MonoidMismatch);
}

TEST_CASE("enumerate_monoids") {
  CHECK(enumerate_monoids(1).size() == 1);
  auto two = enumerate_monoids(2);
  REQUIRE(two.size() == 2);
  CHECK(std::count_if(two.begin(), two.end(), [](auto const& m) { return is_group(m); }) == 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = enumerate_monoids(n);
    CHECK(all.size() == oracles::naive_monoid_count(n));
    for (auto const& m : all) CHECK(m.identity() == 0);
    CHECK(std::is_sorted(all.begin(), all.end(), [](auto const& a, auto const& b) {
      return a.flat_table() < b.flat_table();
    }));
  }
  // Recorded from the exhaustive odometer above.
  CHECK(enumerate_monoids(3).size() == 11);
  CHECK(code_of([] { enumerate_monoids(5); }) == ErrorCode::SizeBoundExceeded);
}

TEST_CASE("is_group and inverse") {
  CHECK(is_group(fixtures::cyclic(2)));
  CHECK_FALSE(is_group(fixtures::e2()));
  CHECK_FALSE(is_group(fixtures::t3()));
  FiniteMonoid s3 = fixtures::s3();
  for (Index g = 0; g < s3.size(); ++g) CHECK(s3.mul(g, inverse(s3, g)) == s3.identity());
  CHECK(code_of([] { inverse(fixtures::e2(), 1); }) == ErrorCode::NotAGroup);
}
