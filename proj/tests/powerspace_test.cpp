#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace smyth;
using fixtures::set;

namespace {

std::vector<PointSet> named(const TopSpace& t, std::vector<std::initializer_list<const char*>> sets) {
  std::vector<PointSet> out;
  for (auto s : sets) out.push_back(set(t, s));
  return out;
}

std::vector<PointSet> sorted(std::vector<PointSet> v) {
  sort_canonical(v);
  return v;
}

}  // namespace

TEST(PowerSpace, ScottChainElements) {
  auto t = fixtures::scott(fixtures::chain2());
  auto ps = build_powerspace(t);
  EXPECT_EQ(sorted(ps.elements()), sorted(named(t, {{"1"}, {"0", "1"}})));
}

TEST(PowerSpace, DiamondHasFiveElements) {
  EXPECT_EQ(build_powerspace(fixtures::scott(fixtures::diamond())).size(), 5u);
}

TEST(PowerSpace, DiscreteTwoPoint) {
  auto t = fixtures::discrete(2);
  auto ps = build_powerspace(t);
  EXPECT_EQ(sorted(ps.elements()), sorted(named(t, {{"a"}, {"b"}, {"a", "b"}})));
}

TEST(PowerSpace, PointNamesAreSortedMemberLists) {
  auto t = fixtures::scott(fixtures::diamond());
  auto ps = build_powerspace(t);
  auto i = ps.index_of(set(t, {"a", "1"}));
  ASSERT_TRUE(i);
  EXPECT_EQ(ps.order().name(*i), "{a,1}");
}

TEST(PowerSpace, CapIsEnforced) {
  Limits tight;
  tight.element_cap = 4;
  EXPECT_THROW(build_powerspace(fixtures::discrete(3), tight), ResourceError);
}

TEST(Box, Examples) {
  auto t = fixtures::scott(fixtures::diamond());
  auto ps = build_powerspace(t);
  EXPECT_EQ(ps.box(t.full_set()), PointSet::full(ps.size()));
  EXPECT_TRUE(ps.box(t.empty_set()).empty());
  auto only = ps.box(set(t, {"1"}));
  ASSERT_EQ(only.count(), 1u);
  EXPECT_EQ(ps.element(*only.first()), set(t, {"1"}));
  EXPECT_THROW(ps.box(set(t, {"0"})), InvalidInput);
  EXPECT_THROW(ps.diamond(set(t, {"1"})), InvalidInput);
}

TEST(Box, DiamondIsComplementOfBox) {
  auto t = fixtures::scott(fixtures::diamond());
  auto ps = build_powerspace(t);
  for (const auto& u : t.opens()) {
    auto c = u.complement();
    EXPECT_EQ(ps.diamond(c), ps.box(u).complement());
  }
}

TEST(CanonicalMap, Examples) {
  auto disc = fixtures::discrete(2);
  auto dps = build_powerspace(disc);
  auto xd = canonical_map(dps);
  EXPECT_EQ(dps.element(xd.graph[0]), set(disc, {"a"}));
  EXPECT_EQ(dps.element(xd.graph[1]), set(disc, {"b"}));
  EXPECT_TRUE(xd.embedding());

  auto chain = fixtures::scott(fixtures::chain2());
  auto cps = build_powerspace(chain);
  auto xc = canonical_map(cps);
  EXPECT_EQ(cps.element(xc.graph[0]), set(chain, {"0", "1"}));
  EXPECT_EQ(cps.element(xc.graph[1]), set(chain, {"1"}));

  auto dia = fixtures::scott(fixtures::diamond());
  auto ps = build_powerspace(dia);
  auto x = canonical_map(ps);
  EXPECT_EQ(ps.element(x.graph[*dia.index_of("a")]), set(dia, {"a", "1"}));
  EXPECT_TRUE(x.embedding());
  EXPECT_TRUE(x.order_embedding);
}

TEST(CanonicalMap, NonT0ReportsInjectivityFailure) {
  auto ps = build_powerspace(fixtures::indiscrete2());
  auto x = canonical_map(ps);
  EXPECT_FALSE(x.injective);
  EXPECT_TRUE(x.injectivity_failure);
}

TEST(ScottOnPowerSpace, Examples) {
  auto chain = build_powerspace(fixtures::scott(fixtures::chain2()));
  EXPECT_EQ(scott_on_powerspace(chain).space.opens().size(), 3u);
  EXPECT_EQ(scott_on_powerspace(build_powerspace(fixtures::discrete(1))).space.opens().size(), 2u);
  // {a}, {b} above {a,b}: up-sets are {}, {A}, {B}, {A,B}, everything.
  auto disc = build_powerspace(fixtures::discrete(2));
  auto s = scott_on_powerspace(disc);
  EXPECT_EQ(s.space.opens().size(), 5u);
  EXPECT_EQ(oracle::up_sets(oracle::from_poset(disc.order())).size(), 5u);
}

TEST(ScottOnPowerSpace, StructuralRouteIsAlexandroff) {
  auto ps = build_powerspace(fixtures::discrete(3));
  auto a = scott_on_powerspace(ps, {}, Method::definitional);
  auto b = scott_on_powerspace(ps, {}, Method::structural);
  EXPECT_EQ(a.space, b.space);
}

TEST(UvScott, FiniteSpaces) {
  EXPECT_TRUE(uv_weaker_than_scott(build_powerspace(fixtures::scott(fixtures::diamond()))).value);
  EXPECT_TRUE(uv_weaker_than_scott(build_powerspace(fixtures::discrete(3))).value);
}

TEST(GenericPoint, Examples) {
  auto chain = fixtures::scott(fixtures::chain2());
  EXPECT_EQ(generic_point_via_powerspace(chain, PointSet::full(2)).point, 1u);
  auto dia = fixtures::scott(fixtures::diamond());
  auto t = generic_point_via_powerspace(dia, set(dia, {"0", "a"}));
  EXPECT_EQ(dia.name(t.point), "a");
  EXPECT_TRUE(t.claim_upper_bounds && t.claim_least_element && t.claim_generic);
  for (std::size_t x = 0; x < dia.size(); ++x)
    EXPECT_EQ(generic_point_via_powerspace(dia, dia.point_closure(x)).point, x);
}

TEST(GenericPoint, RejectsBadInput) {
  auto dia = fixtures::scott(fixtures::diamond());
  EXPECT_THROW(generic_point_via_powerspace(dia, set(dia, {"0", "a", "b"})), InvalidInput);
  EXPECT_THROW(generic_point_via_powerspace(dia, set(dia, {"a"})), InvalidInput);
  EXPECT_THROW(generic_point_via_powerspace(fixtures::indiscrete2(), PointSet::full(2)), InvalidInput);
}

TEST(Iterate, SingletonStaysSingleton) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(iterate_powerspace(fixtures::discrete(1), n).size(), 1u);
}

TEST(Iterate, DiscreteTwoPointTwice) {
  // Brute force: D(X) is three points {a} {b} {a,b}; D of its upper space.
  auto inner = oracle::upper(oracle::Space{2, {0, 1, 2, 3}});
  auto outer = oracle::upper(inner.uv);
  EXPECT_EQ(iterate_powerspace(fixtures::discrete(2), 2).size(), outer.elements.size());
}

TEST(Iterate, ChainStaysChain) {
  auto ps = iterate_powerspace(fixtures::scott(fixtures::chain2()), 2);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_FALSE(ps.order().lattice_failure());
  EXPECT_TRUE(ps.order().leq(0, 1) || ps.order().leq(1, 0));
}

TEST(PowerSpace, MatchesOracleOnRandomSpaces) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng() % 4);
    auto o = oracle::random_space(n, rng);
    auto t = oracle::to_space(o);
    auto ps = build_powerspace(t);
    auto up = oracle::upper(o);
    ASSERT_EQ(ps.size(), up.elements.size()) << trial;
    // Map oracle element indices to library indices.
    std::vector<std::size_t> at;
    for (auto m : up.elements) {
      auto i = ps.index_of(oracle::to_set(n, m));
      ASSERT_TRUE(i) << trial;
      at.push_back(*i);
    }
    auto spec = specialization(ps.uv());
    const int m = int(up.elements.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        EXPECT_EQ(spec.preorder.leq(at[i], at[j]), oracle::spec_leq(up.uv, i, j)) << trial;
        // Specialization of the upper space is reverse inclusion.
        EXPECT_EQ(oracle::spec_leq(up.uv, i, j), oracle::subset(up.elements[j], up.elements[i])) << trial;
      }
    EXPECT_EQ(ps.uv().enumerate_opens(1 << 16)->size(), up.uv.opens.size()) << trial;
    for (auto u : up.uv.opens) {
      PointSet mapped(ps.size());
      for (int i = 0; i < m; ++i)
        if (oracle::has(u, i)) mapped.insert(at[i]);
      EXPECT_TRUE(ps.uv().is_open(mapped)) << trial;
    }
    EXPECT_EQ(is_sober(ps.uv()).value, oracle::sober(up.uv)) << trial;
  }
}
