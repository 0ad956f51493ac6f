#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spectile/cyclic_core.hpp"

using namespace spectile;

namespace {

std::vector<Element> elems(const MultiSet& m) { return m.elements(); }

}  // namespace

TEST(CyclicGroup, FactorizesSquareFreeOrders) {
  auto g30 = make_group(30);
  EXPECT_EQ(std::vector<std::uint64_t>(g30.primes().begin(), g30.primes().end()),
            (std::vector<std::uint64_t>{2, 3, 5}));
  auto g = make_group(105);
  EXPECT_EQ(std::vector<std::uint64_t>(g.primes().begin(), g.primes().end()),
            (std::vector<std::uint64_t>{3, 5, 7}));
  EXPECT_EQ(make_group(2).rank(), 1u);
}

TEST(CyclicGroup, RejectsBadOrders) {
  try {
    make_group(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquareFree);
  }
  EXPECT_THROW(make_group(60), Error);
  EXPECT_THROW(make_group(1), Error);
  EXPECT_THROW(make_group(0), Error);
  EXPECT_THROW(make_group(1'000'003), Error);  // above the default cap
  EXPECT_NO_THROW(make_group(1'000'003, 2'000'000));
}

TEST(Crt, ToCrtExamples) {
  auto g = make_group(30);
  EXPECT_EQ(to_crt(7, g).coords, (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(to_crt(0, g).coords, (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(to_crt(29, g).coords, (std::vector<std::uint64_t>{1, 2, 4}));
}

TEST(Crt, FromCrtMatchesLinearScan) {
  auto g = make_group(30);
  std::vector<std::uint64_t> primes{2, 3, 5};
  EXPECT_EQ(from_crt({{1, 2, 3}}, g), oracle::from_residues({1, 2, 3}, primes));
  EXPECT_EQ(from_crt({{1, 2, 3}}, g), 23u);
  EXPECT_EQ(from_crt({{0, 0, 0}}, g), 0u);
  EXPECT_EQ(from_crt({{1, 1, 2}}, g), 7u);
  EXPECT_THROW(from_crt({{2, 0, 0}}, g), Error);
  EXPECT_THROW(from_crt({{0, 0}}, g), Error);
}

TEST(Crt, BijectiveHomomorphismOnSeveralGroups) {
  for (std::uint64_t n : {6u, 30u, 42u, 105u, 210u, 2310u}) {
    auto g = make_group(n);
    std::vector<std::uint64_t> primes(g.primes().begin(), g.primes().end());
    std::vector<std::uint8_t> seen(n, 0);
    for (Element x = 0; x < n; ++x) {
      auto v = to_crt(x, g);
      EXPECT_EQ(from_crt(v, g), x);
      if (n <= 210) {
        EXPECT_EQ(oracle::from_residues(v.coords, primes), x);
      }
      seen[x] = 1;
    }
    std::mt19937_64 rng(n);
    for (int i = 0; i < 200; ++i) {
      Element x = rng() % n, y = rng() % n;
      auto vx = to_crt(x, g), vy = to_crt(y, g), vs = to_crt((x + y) % n, g);
      for (std::size_t j = 0; j < g.rank(); ++j) {
        EXPECT_EQ(vs.coords[j], (vx.coords[j] + vy.coords[j]) % g.primes()[j]);
      }
    }
  }
}

TEST(Units, MatchGcdScan) {
  for (std::uint64_t n : {2u, 6u, 30u, 42u, 105u}) {
    auto g = make_group(n);
    EXPECT_EQ(units(g), oracle::units(n));
    EXPECT_EQ(g.euler_phi(), oracle::units(n).size());
  }
  EXPECT_EQ(units(make_group(30)), (std::vector<Element>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(units(make_group(6)), (std::vector<Element>{1, 5}));
  EXPECT_EQ(units(make_group(2)), (std::vector<Element>{1}));
}

TEST(Cycles, Examples) {
  auto g = make_group(30);
  EXPECT_EQ(elems(cycle_elements(g, make_cycle(g, 2, 0))), (std::vector<Element>{0, 15}));
  EXPECT_EQ(elems(cycle_elements(g, make_cycle(g, 5, 0))), (std::vector<Element>{0, 6, 12, 18, 24}));
  EXPECT_EQ(elems(cycle_elements(g, make_cycle(g, 3, 5))), (std::vector<Element>{5, 15, 25}));
  EXPECT_THROW(make_cycle(g, 4, 0), Error);
  EXPECT_THROW(make_cycle(g, 1, 0), Error);
  EXPECT_THROW(cycle_elements(g, Cycle{7, 0}), Error);
}

TEST(Cycles, EveryDivisorGivesDDistinctElements) {
  auto g = make_group(30);
  for (std::uint64_t d : g.divisors()) {
    if (d < 2) continue;
    for (Element j = 0; j < 30; ++j) {
      auto c = cycle_elements(g, make_cycle(g, d, j));
      EXPECT_EQ(c.size(), d);
      EXPECT_TRUE(c.is_set());
    }
  }
}

TEST(Scaling, Examples) {
  auto g = make_group(30);
  EXPECT_EQ(scale_multiset(5, MultiSet::of(g, {0, 3})), MultiSet::of(g, {0, 15}));
  EXPECT_EQ(scale_multiset(6, MultiSet::of(g, {0, 6, 12, 18, 24})),
            MultiSet::of(g, {0, 6, 12, 18, 24}));
  auto s = scale_multiset(15, MultiSet::of(g, {0, 1, 2}));
  EXPECT_EQ(s.count(0), 2u);
  EXPECT_EQ(s.count(15), 1u);
  EXPECT_EQ(s.size(), 3u);
}

TEST(Scaling, UnitMultipleOfPrimeCycleIsPrimeCycle) {
  auto g = make_group(30);
  for (std::size_t pos = 0; pos < g.rank(); ++pos) {
    std::uint64_t p = g.primes()[pos];
    for (Element j = 0; j < 30; ++j) {
      auto line = cycle_elements(g, make_cycle(g, p, j));
      for (std::uint64_t y = 1; y < 30; ++y) {
        if (y % p == 0) continue;
        auto img = scale_multiset(y, line);
        ASSERT_TRUE(img.is_set());
        auto e = img.support();
        // Same non-p coordinates, all p coordinates.
        EXPECT_EQ(img, cycle_elements(g, make_cycle(g, p, e[0])));
      }
    }
  }
}

TEST(MultiSet, BasicsAndErrors) {
  auto g = make_group(30);
  auto m = MultiSet::of(g, {0, 0, 15, -1, 31});
  EXPECT_EQ(m.size(), 5u);
  EXPECT_EQ(m.count(0), 2u);
  EXPECT_EQ(m.count(29), 1u);
  EXPECT_EQ(m.count(1), 1u);
  EXPECT_FALSE(m.is_set());
  EXPECT_EQ(to_string(m), "{0^2,1,15,29}");
  m.remove(0);
  EXPECT_EQ(m.count(0), 1u);
  EXPECT_THROW(m.remove(2), Error);
  EXPECT_THROW(m.add(3, MultiSet::kMaxMultiplicity + 1), Error);
  EXPECT_THROW(MultiSet(g, std::vector<MultiSet::Count>(29, 0)), Error);
  EXPECT_EQ(MultiSet::full(g).size(), 30u);
  EXPECT_EQ(translate(MultiSet::of(g, {0, 15}), 7), MultiSet::of(g, {7, 22}));
  EXPECT_EQ(affine_image(MultiSet::of(g, {0, 1}), 7, 0), MultiSet::of(g, {0, 7}));
}
