#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "symrep/completion.hpp"
#include "symrep/oracle.hpp"

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

std::vector<FiniteMonoid> small_group_tables() {
  std::vector<FiniteMonoid> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto const& m : enumerate_monoids(n))
      if (is_group(m)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("group_completion examples") {
  GroupCompletion c2 = group_completion(fixtures::cyclic(2));
  CHECK(c2.group == fixtures::cyclic(2));
  CHECK(c2.q.mapping == std::vector<Index>{0, 1});
  CHECK(c2.kernel.classes() == std::vector<std::vector<Index>>{{0}, {1}});

  GroupCompletion e2 = group_completion(fixtures::e2());
  CHECK(e2.group.size() == 1);
  CHECK(e2.q.mapping == std::vector<Index>{0, 0});

  GroupCompletion t3 = group_completion(fixtures::t3());
  CHECK(t3.group.size() == 2);
  CHECK(t3(1) != t3.group.identity());
  CHECK(t3(2) == t3.group.identity());
  CHECK(t3.lift(t3(1)) == 1);
}

TEST_CASE("completion invariants over all small monoids") {
  auto groups = small_group_tables();
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto const& m : enumerate_monoids(n)) {
      GroupCompletion gc = group_completion(m);
      CHECK(is_group(gc.group));
      CHECK(is_hom(m, gc.group, gc.q.mapping));
      for (Index e : idempotents(m)) CHECK(gc(e) == gc.group.identity());
      std::vector<bool> hit(gc.group.size(), false);
      for (Index x = 0; x < m.size(); ++x) hit[gc(x)] = true;
      CHECK(std::find(hit.begin(), hit.end(), false) == hit.end());
      for (Index a = 0; a < m.size(); ++a)
        for (Index b = 0; b < m.size(); ++b) CHECK(gc.kernel.related(a, b) == (gc(a) == gc(b)));
      CHECK(verify_universal_property(gc, groups));
      // Hom(M, G) and Hom(G(M), G) have the same size for every small group G.
      for (auto const& g : groups)
        CHECK(oracles::naive_hom_count(m, g) == oracles::naive_hom_count(gc.group, g));
    }
}

TEST_CASE("verify_universal_property negative control") {
  auto groups = small_group_tables();
  CHECK(verify_universal_property(group_completion(fixtures::cyclic(2)), groups));
  CHECK(verify_universal_property(group_completion(fixtures::e2()), groups));
  // Pretend C2 completes to the trivial group.
  GroupCompletion wrong = group_completion(fixtures::cyclic(2));
  wrong.group = fixtures::trivial();
  wrong.q = make_hom(fixtures::cyclic(2), fixtures::trivial(), {0, 0});
  wrong.kernel = congruence_closure(fixtures::cyclic(2), {{0, 1}});
  CHECK_FALSE(verify_universal_property(wrong, groups));
}

TEST_CASE("factor_through_completion") {
  GroupCompletion t3 = group_completion(fixtures::t3());
  CHECK(factor_through_completion(t3, t3.q).mapping == std::vector<Index>{0, 1});
  MonoidHom f = make_hom(fixtures::t3(), fixtures::cyclic(2), {0, 1, 0});
  MonoidHom h = factor_through_completion(t3, f);
  for (Index m = 0; m < 3; ++m) CHECK(h(t3(m)) == f(m));

  GroupCompletion e2 = group_completion(fixtures::e2());
  MonoidHom triv = make_hom(fixtures::e2(), fixtures::cyclic(2), {0, 0});
  CHECK(factor_through_completion(e2, triv).mapping == std::vector<Index>{0});

  MonoidHom to_monoid = make_hom(fixtures::t3(), fixtures::e2(), {0, 0, 0});
  CHECK(code_of([&] { factor_through_completion(t3, to_monoid); }) == ErrorCode::TargetNotGroup);
  MonoidHom elsewhere = make_hom(fixtures::e2(), fixtures::cyclic(2), {0, 0});
  CHECK(code_of([&] { factor_through_completion(t3, elsewhere); }) == ErrorCode::MonoidMismatch);
}

TEST_CASE("all_subgroups") {
  CHECK(all_subgroups(fixtures::trivial()).subgroups == std::vector<std::vector<Index>>{{0}});
  CHECK(all_subgroups(fixtures::cyclic(2)).subgroups == std::vector<std::vector<Index>>{{0}, {0, 1}});
  CHECK(all_subgroups(fixtures::cyclic(4)).subgroups ==
        std::vector<std::vector<Index>>{{0}, {0, 2}, {0, 1, 2, 3}});
  for (auto const& g : {fixtures::s3(), fixtures::v4(), fixtures::cyclic(3), fixtures::cyclic(4)}) {
    auto family = all_subgroups(g);
    CHECK(family.subgroups == oracles::naive_submonoids(g));
    CHECK(is_conjugacy_closed(g, family.subgroups));
  }
  CHECK(all_subgroups(fixtures::s3()).subgroups.size() == 6);
  CHECK(code_of([] { all_subgroups(fixtures::e2()); }) == ErrorCode::NotAGroup);
  Bounds tight;
  tight.max_subgroup_order = 3;
  CHECK(code_of([&] { all_subgroups(fixtures::v4(), tight); }) == ErrorCode::SizeBoundExceeded);
}

TEST_CASE("subgroup predicates") {
  FiniteMonoid s3 = fixtures::s3();
  std::vector<std::vector<Index>> twos;
  for (auto const& h : all_subgroups(s3).subgroups)
    if (h.size() == 2) twos.push_back(h);
  REQUIRE(twos.size() == 3);
  CHECK_FALSE(is_conjugacy_closed(s3, {{0}, twos.front()}));
  CHECK(is_conjugacy_closed(s3, {{0}, twos[0], twos[1], twos[2]}));
  CHECK(is_conjugacy_closed(fixtures::v4(), {{0, 1}}));
  CHECK(code_of([&] { is_conjugacy_closed(s3, {{0, 1, 2}}); }) == ErrorCode::NotASubgroup);

  CHECK(is_subgroup(fixtures::cyclic(4), {0, 2}));
  CHECK_FALSE(is_subgroup(fixtures::cyclic(4), {0, 1}));
  CHECK(generated_subgroup(fixtures::cyclic(4), {2}) == std::vector<Index>{0, 2});
  CHECK(left_cosets(fixtures::cyclic(4), {0, 2}) == std::vector<std::vector<Index>>{{0, 2}, {1, 3}});
}

TEST_CASE("small_groups") {
  auto groups = small_groups(4);
  for (auto const& g : groups) CHECK(is_group(g));
  CHECK(groups.size() == small_group_tables().size());
}
