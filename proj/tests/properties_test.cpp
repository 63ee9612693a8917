// Seeded property checks. Each property draws its cases from its own seed so
// a failure message (property, seed, trial) reproduces on its own.

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace smyth;

namespace {

constexpr std::uint64_t kSeed = 20240601;

Poset random_small_poset(std::mt19937_64& rng, int max_n = 6) {
  return oracle::to_poset(oracle::random_order(1 + int(rng() % max_n), rng));
}

PointSet random_subset(std::size_t n, std::mt19937_64& rng) {
  return PointSet::from_mask(n, rng() & oracle::full(int(n)));
}

}  // namespace

TEST(Property, UpSetIsClosureOperator) {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_small_poset(rng);
    auto a = random_subset(p.size(), rng), b = random_subset(p.size(), rng);
    auto ua = p.up_set(a);
    EXPECT_TRUE(a.is_subset_of(ua)) << trial;
    EXPECT_EQ(p.up_set(ua), ua) << trial;
    EXPECT_TRUE(p.up_set(a & b).is_subset_of(p.up_set(b))) << trial;
    EXPECT_TRUE(p.down_set(a).is_subset_of(p.down_set(a | b))) << trial;
  }
}

TEST(Property, SupIsLeastUpperBound) {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_small_poset(rng);
    auto o = oracle::from_poset(p);
    auto s = random_subset(p.size(), rng);
    auto sup = p.sup(s);
    auto expect = oracle::sup(o, oracle::to_mask(s));
    ASSERT_EQ(sup.has_value(), expect.has_value()) << trial;
    if (!sup) continue;
    EXPECT_EQ(int(*sup), *expect) << trial;
    s.for_each([&](std::size_t x) { EXPECT_TRUE(p.leq(x, *sup)); });
    p.upper_bounds(s).for_each([&](std::size_t u) { EXPECT_TRUE(p.leq(*sup, u)); });
  }
}

TEST(Property, SpecializationOfAlexandroffRecoversOrder) {
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_small_poset(rng, 8);
    EXPECT_EQ(specialization(alexandroff_topology(p)).preorder, static_cast<const Preorder&>(p)) << trial;
  }
}

TEST(Property, SaturationIsUpSetInSpecialization) {
  std::mt19937_64 rng(kSeed + 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto o = oracle::random_space(1 + int(rng() % 6), rng);
    auto t = oracle::to_space(o);
    auto spec = specialization(t).preorder;
    for_each_subset(t.size(), [&](const PointSet& s) { EXPECT_EQ(saturation(t, s), spec.up_set(s)) << trial; });
  }
}

TEST(Property, ConstructorsYieldTopologies) {
  std::mt19937_64 rng(kSeed + 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng() % 6;
    std::vector<PointSet> sub;
    for (int i = 0; i < 3; ++i) sub.push_back(random_subset(n, rng));
    auto t = TopSpace::from_subbasis(numbered_names(n), sub);
    auto opens = t.enumerate_opens(1 << 12);
    ASSERT_TRUE(opens) << trial;
    // from_opens re-validates union and intersection closure.
    EXPECT_NO_THROW(TopSpace::from_opens(numbered_names(n), *opens)) << trial;
    for (const auto& s : sub) EXPECT_TRUE(t.is_open(s)) << trial;
  }
}

TEST(Property, FiniteT0SpacesAreSoberWithMaximalGenericPoints) {
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_small_poset(rng);
    auto t = alexandroff_topology(p);
    EXPECT_TRUE(is_sober(t).value) << trial;
    for (const auto& f : irreducible_closed_sets(t).sets) {
      auto g = generic_points(t, f);
      ASSERT_EQ(g.count(), 1u) << trial;
      EXPECT_EQ(p.maximal(f), g) << trial;
    }
  }
}

TEST(Property, ImplicationChainOnT0Spaces) {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < 200; ++trial) {
    auto o = oracle::random_space(1 + int(rng() % 5), rng);
    auto t = oracle::to_space(o);
    if (!specialization(t).t0) continue;
    auto r = analyze(t);
    EXPECT_TRUE(!r.sober.value || r.well_filtered.value) << trial;
    EXPECT_TRUE(!r.well_filtered.value || r.d_space.value) << trial;
  }
}

TEST(Property, HeckmannKeimelAtFiniteScale) {
  std::mt19937_64 rng(kSeed + 8);
  for (int trial = 0; trial < 150; ++trial) {
    auto o = oracle::random_space(1 + int(rng() % 4), rng);
    auto t = oracle::to_space(o);
    if (!specialization(t).t0) continue;
    auto ps = build_powerspace(t);
    EXPECT_EQ(is_sober(t).value, is_sober(ps.uv()).value) << trial;
    EXPECT_TRUE(canonical_map(ps).embedding()) << trial;
  }
}

TEST(Property, GenericPointMatchesSobrietyOracle) {
  std::mt19937_64 rng(kSeed + 9);
  for (int trial = 0; trial < 100; ++trial) {
    auto o = oracle::alexandroff(oracle::random_order(1 + int(rng() % 5), rng));
    auto t = oracle::to_space(o);
    auto ps = build_powerspace(t);
    auto setup = prepare_generic_point(ps);
    for (auto f : oracle::irreducible_closed(o)) {
      int generic = -1;
      for (int x = 0; x < o.n; ++x)
        if (oracle::closure(o, oracle::Mask{1} << x) == f) generic = x;
      auto trace = generic_point_via_powerspace(ps, setup, oracle::to_set(o.n, f));
      EXPECT_EQ(int(trace.point), generic) << trial;
    }
  }
}

TEST(Property, DiamondIsComplementOfBox) {
  std::mt19937_64 rng(kSeed + 10);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = oracle::to_space(oracle::random_space(1 + int(rng() % 5), rng));
    auto ps = build_powerspace(t);
    const auto opens = t.enumerate_opens(1 << 10);
    ASSERT_TRUE(opens);
    for (const auto& u : *opens) EXPECT_EQ(ps.diamond(u.complement()), ps.box(u).complement()) << trial;
  }
}

TEST(Property, FrameLatticeIsComplete) {
  Rng lrng(kSeed + 11);
  for (int trial = 0; trial < 30; ++trial) {
    auto fr = build_frame(random_lattice(2 + lrng.below(4), lrng));
    if (fr.size() > 12) continue;
    for_each_subset(fr.size(), [&](const PointSet& fam) { EXPECT_NO_THROW(check_join_meet(fr, fam)) << trial; });
  }
}

TEST(Property, RudinAndUnionOnRandomFamilies) {
  std::mt19937_64 rng(kSeed + 12);
  int verified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto t = alexandroff_topology(random_small_poset(rng, 4));
    auto ps = build_powerspace(t);
    auto family = random_subset(ps.size(), rng);
    if (family.empty()) continue;
    EXPECT_TRUE(union_of_compact_family(ps, family).member) << trial;
    if (!is_irreducible(ps.uv(), family)) continue;
    auto c = t.closure(random_subset(t.size(), rng));
    bool meets = true;
    family.for_each([&](std::size_t i) { meets = meets && ps.element(i).intersects(c); });
    if (!meets) continue;
    EXPECT_TRUE(rudin_minimal(ps, family, c).verified()) << trial;
    ++verified;
  }
  EXPECT_GT(verified, 20);
}

TEST(Property, WellFilteredTransferThreeWay) {
  std::mt19937_64 rng(kSeed + 13);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = oracle::to_space(oracle::random_space(1 + int(rng() % 4), rng));
    if (!specialization(t).t0) continue;
    auto r = wf_transfer_check(t);
    EXPECT_TRUE(r.agree && r.three_way) << trial;
  }
}

TEST(Property, CocountableFilteredFamiliesHaveLeastMember) {
  std::mt19937_64 rng(kSeed + 14);
  using S = SymbolicSet;
  for (int trial = 0; trial < 300; ++trial) {
    // Close a few finite sets under intersection: a filtered family.
    std::vector<S> family;
    const auto core = rng() % 10;
    for (int i = 0; i < 1 + int(rng() % 4); ++i) {
      std::vector<std::uint64_t> s{core};
      for (std::uint64_t x = 0; x < 10; ++x)
        if (rng() % 3 == 0) s.push_back(x);
      family.push_back(S::finite(s));
    }
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        auto m = family[i] & family[j];
        if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
      }
    nlohmann::json fams = nlohmann::json::array();
    nlohmann::json one = nlohmann::json::array();
    for (const auto& s : family) one.push_back(to_json(s));
    fams.push_back(one);
    EXPECT_TRUE(check_witness("omega-cocountable-model", {{"kind", "least-member-argument"}, {"families", fams}}))
        << trial;
  }
}
