#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "spectile/mask_poly.hpp"

using namespace spectile;

namespace {

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

MultiSet random_multiset(const CyclicGroup& g, std::mt19937_64& rng, std::uint64_t max_size,
                         std::uint32_t max_mult) {
  MultiSet m(g);
  std::uint64_t size = 1 + rng() % max_size;
  for (std::uint64_t i = 0; i < size; ++i) m.add(rng() % g.order(), 1 + rng() % max_mult);
  return m;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  auto a = poly({1, 1});   // X + 1
  auto b = poly({-1, 1});  // X - 1
  EXPECT_EQ(a * b, poly({-1, 0, 1}));
  EXPECT_EQ(a + b, poly({0, 2}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ((a * b).to_string(), "X^2 - 1");
  auto [q, r] = divide_monic(poly({-1, 0, 0, 1}), b);
  EXPECT_EQ(q, poly({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divide_monic(a, poly({1, 2})), Error);
  auto big = poly({std::numeric_limits<std::int64_t>::max()});
  EXPECT_THROW(big + big, Error);
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(30).to_string(), "X^8 + X^7 - X^5 - X^4 - X^3 + X + 1");
  EXPECT_THROW(cyclotomic(0), Error);
}

TEST(Cyclotomic, MatchesMobiusProductOracle) {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    auto expect = oracle::cyclotomic(n);
    auto got = cyclotomic(n).coeffs();
    ASSERT_EQ(std::vector<long long>(got.begin(), got.end()), expect) << "n=" << n;
  }
}

TEST(Cyclotomic, DegreeAndValueAtOne) {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const auto& phi = cyclotomic(n);
    EXPECT_EQ(static_cast<std::uint64_t>(phi.degree()), arith::euler_phi(n));
    auto f = arith::factorize(n);
    std::int64_t expect = 1;
    if (f.primes.size() == 1) expect = static_cast<std::int64_t>(f.primes[0]);
    EXPECT_EQ(phi.eval_at_one(), expect) << "n=" << n;
  }
}

TEST(Cyclotomic, ConcurrentAccessIsConsistent) {
  std::vector<std::jthread> pool;
  std::vector<std::vector<std::int64_t>> results(4);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      auto c = cyclotomic(2310).coeffs();
      results[t].assign(c.begin(), c.end());
    });
  }
  pool.clear();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(results[t], results[0]);
  auto expect = oracle::cyclotomic(2310);
  EXPECT_EQ(results[0], std::vector<std::int64_t>(expect.begin(), expect.end()));
}

TEST(RootIsZero, Examples) {
  auto g = make_group(30);
  EXPECT_TRUE(root_is_zero(MultiSet::of(g, {0, 15}), 15));
  for (std::uint64_t d : g.divisors()) EXPECT_FALSE(root_is_zero(MultiSet::of(g, {0}), d));
  EXPECT_TRUE(root_is_zero(MultiSet::of(g, {0, 10, 20}), 2));
  EXPECT_TRUE(oracle::vanishes(MultiSet::of(g, {0, 10, 20}), 2));
  EXPECT_LT(std::abs(oracle::evaluate(MultiSet::of(g, {0, 10, 20}), 2)), 1e-12L);
  EXPECT_THROW(root_is_zero(MultiSet::of(g, {0}), 4), Error);
  EXPECT_FALSE(root_is_zero(MultiSet::of(g, {0}), 30));
}

TEST(RootIsZero, AgreesWithOracleOnRandomMultisets) {
  std::mt19937_64 rng(7);
  for (std::uint64_t n : {30u, 42u, 66u, 105u}) {
    auto g = make_group(n);
    for (int i = 0; i < 300; ++i) {
      auto a = random_multiset(g, rng, 12, 3);
      for (std::uint64_t d : g.divisors()) {
        if (d == n) continue;
        ASSERT_EQ(root_is_zero(a, d), oracle::vanishes(a, d)) << to_string(a) << " d=" << d;
      }
    }
  }
}

TEST(RootIsZero, AgreesWithOracleOnUnionsOfCycles) {
  std::mt19937_64 rng(11);
  auto g = make_group(105);
  for (int i = 0; i < 200; ++i) {
    MultiSet a(g);
    for (int c = 0; c < 3; ++c) {
      std::uint64_t p = g.primes()[rng() % 3];
      auto cyc = cycle_elements(g, make_cycle(g, p, rng() % 105));
      for (Element x : cyc.elements()) a.add(x);
    }
    for (std::uint64_t d : g.divisors()) {
      if (d == 105) continue;
      ASSERT_EQ(root_is_zero(a, d), oracle::vanishes(a, d));
    }
    EXPECT_TRUE(root_is_zero(a, 1));
  }
}

TEST(ZeroProfile, Examples) {
  auto g = make_group(30);
  auto z = zero_profile(MultiSet::of(g, {0, 15}));
  EXPECT_EQ(z.divisor_zeros, (std::vector<std::uint64_t>{1, 3, 5, 15}));
  std::vector<Element> odd;
  for (Element x = 1; x < 30; x += 2) odd.push_back(x);
  EXPECT_EQ(z.full_zeros(), odd);
  EXPECT_EQ(z.s_a, (std::vector<std::uint64_t>{2}));

  auto full = zero_profile(MultiSet::full(g));
  EXPECT_EQ(full.divisor_zeros, (std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15}));
  EXPECT_EQ(full.s_a, (std::vector<std::uint64_t>{2, 3, 5}));

  auto tri = zero_profile(MultiSet::of(g, {0, 1, 2}));
  EXPECT_EQ(tri.divisor_zeros, (std::vector<std::uint64_t>{10}));
  EXPECT_EQ(tri.full_zeros(), (std::vector<Element>{10, 20}));
  EXPECT_EQ(tri.s_a, (std::vector<std::uint64_t>{3}));

  EXPECT_THROW(zero_profile(MultiSet(g)), Error);
}

TEST(ZeroProfile, FullZeroSetMatchesPointwiseOracle) {
  std::mt19937_64 rng(3);
  for (std::uint64_t n : {30u, 42u}) {
    auto g = make_group(n);
    for (int i = 0; i < 150; ++i) {
      auto a = random_multiset(g, rng, 10, 2);
      auto z = zero_profile(a);
      ASSERT_EQ(z.full_zeros(), oracle::zero_set(a)) << to_string(a);
      EXPECT_FALSE(z.contains(0));
      for (std::uint64_t s : z.s_a) EXPECT_TRUE(z.has_divisor_zero(n / s));
    }
  }
}

TEST(ZeroProfile, UnitOrbitClosedAndDivisibilityLaws) {
  std::mt19937_64 rng(5);
  auto g = make_group(30);
  for (int i = 0; i < 300; ++i) {
    auto a = random_multiset(g, rng, 15, 2);
    auto z = zero_profile(a);
    for (Element u : g.units())
      for (Element n = 0; n < 30; ++n) ASSERT_EQ(z.contains(n), z.contains(n * u % 30));
    std::uint64_t prod = 1;
    for (std::uint64_t s : z.s_a) prod *= s;
    EXPECT_EQ(a.size() % prod, 0u);
    for (std::uint64_t p : g.primes()) {
      std::uint64_t k = prime_power_zero_count(a, p);
      EXPECT_LE(k, 1u);
      if (k == 1) {
        EXPECT_EQ(a.size() % p, 0u);
      }
    }
  }
}

TEST(PrimePowerZeroCount, Examples) {
  auto g = make_group(30);
  EXPECT_EQ(prime_power_zero_count(MultiSet::of(g, {0, 15}), 2), 1u);
  EXPECT_EQ(prime_power_zero_count(MultiSet::of(g, {0}), 5), 0u);
  EXPECT_EQ(prime_power_zero_count(MultiSet::of(g, {0, 1, 2}), 3), 1u);
  EXPECT_THROW(prime_power_zero_count(MultiSet::of(g, {0}), 7), Error);
}

TEST(EvaluateAtRoot, MatchesExactDecision) {
  std::mt19937_64 rng(9);
  auto g = make_group(42);
  for (int i = 0; i < 300; ++i) {
    auto a = random_multiset(g, rng, 10, 2);
    for (std::uint64_t d : g.divisors()) {
      if (d == 42) continue;
      bool small = std::abs(evaluate_at_root(a, static_cast<std::int64_t>(d))) < 1e-9 * a.size();
      EXPECT_EQ(small, root_is_zero(a, d));
    }
  }
}
