#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spectile/spectral.hpp"
#include "spectile/tiling.hpp"

using namespace spectile;

namespace {

MultiSet random_set(const CyclicGroup& g, std::uint64_t k, std::mt19937_64& rng) {
  MultiSet a(g);
  while (a.size() < k) {
    Element x = rng() % g.order();
    if (!a.contains(x)) a.add(x);
  }
  return a;
}

std::vector<std::uint64_t> as_u64(const MultiSet& m) {
  auto e = m.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(VerifySpectralPair, Examples) {
  auto g = make_group(30);
  auto five = MultiSet::of(g, {0, 6, 12, 18, 24});
  EXPECT_TRUE(verify_spectral_pair(five, MultiSet::of(g, {0, 1, 2, 3, 4})));
  EXPECT_TRUE(verify_spectral_pair(five, five));
  EXPECT_TRUE(verify_spectral_pair(MultiSet::of(g, {0, 15}), MultiSet::of(g, {0, 1})));
  EXPECT_FALSE(verify_spectral_pair(MultiSet::of(g, {0, 15}), MultiSet::of(g, {0, 2})));
  EXPECT_FALSE(verify_spectral_pair(five, MultiSet::of(g, {0, 1, 2, 3})));
  EXPECT_FALSE(verify_spectral_pair(MultiSet(g), MultiSet(g)));
  EXPECT_TRUE(verify_spectral_pair(MultiSet::of(g, {9}), MultiSet::of(g, {4})));
  EXPECT_TRUE(verify_spectral_pair(MultiSet::full(g), MultiSet::full(g)));
}

TEST(VerifySpectralPair, AgreesWithComplexOrthogonality) {
  std::mt19937_64 rng(67);
  auto g = make_group(30);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t k = 1 + rng() % 6;
    auto a = random_set(g, k, rng);
    // Half the candidates are lattice points, which are spectra more often.
    MultiSet b = (rng() % 2) ? random_set(g, k, rng) : MultiSet(g);
    if (b.empty()) {
      std::uint64_t step = std::array<std::uint64_t, 4>{1, 5, 6, 10}[rng() % 4];
      for (std::uint64_t j = 0; j < k; ++j) b.add(j * step % 30);
      if (!b.is_set()) continue;
    }
    EXPECT_EQ(verify_spectral_pair(a, b), oracle::spectral_with(a, as_u64(b)))
        << to_string(a) << " " << to_string(b);
    EXPECT_EQ(hadamard_check(a, b), verify_spectral_pair(a, b));
  }
}

TEST(Hadamard, Examples) {
  auto g = make_group(30);
  auto a = MultiSet::of(g, {0, 6, 12, 18, 24});
  auto b = MultiSet::of(g, {0, 1, 2, 3, 4});
  EXPECT_LT(hadamard_gram_deviation(a, b), 1e-9);
  EXPECT_TRUE(hadamard_check(a, b));
  EXPECT_GT(hadamard_gram_deviation(a, MultiSet::of(g, {0, 1, 2, 3, 5})), 1e-3);
  EXPECT_FALSE(hadamard_check(a, MultiSet::of(g, {0, 1, 2, 3, 5})));
  try {
    hadamard_check(a, MultiSet::of(g, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
  }
}

TEST(SpectralDuality, Examples) {
  auto g = make_group(30);
  auto a = MultiSet::of(g, {0, 6, 12, 18, 24});
  auto b = MultiSet::of(g, {0, 1, 2, 3, 4});
  EXPECT_TRUE(spectral_duality(a, b));
  EXPECT_TRUE(spectral_duality(MultiSet::of(g, {0, 15}), MultiSet::of(g, {0, 1})));
  try {
    spectral_duality(a, MultiSet::of(g, {0, 1, 2, 3, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

TEST(FindSpectrum, Examples) {
  auto g = make_group(30);
  auto r = find_spectrum(MultiSet::of(g, {0, 6, 12, 18, 24}));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.witness, MultiSet::of(g, {0, 1, 2, 3, 4}));
  auto two = find_spectrum(MultiSet::of(g, {0, 15}));
  ASSERT_TRUE(two.found());
  EXPECT_EQ(*two.witness, MultiSet::of(g, {0, 1}));
  EXPECT_TRUE(find_spectrum(MultiSet::of(g, {0, 1, 3})).infeasible());
  EXPECT_EQ(*find_spectrum(MultiSet::of(g, {11})).witness, MultiSet::of(g, {0}));
  EXPECT_THROW(find_spectrum(MultiSet::of(g, {0, 0})), Error);
}

TEST(FindSpectrum, MatchesLexLeastOracle) {
  std::mt19937_64 rng(71);
  for (std::uint64_t n : {6u, 10u, 15u, 30u}) {
    auto g = make_group(n);
    int spectral = 0;
    for (int i = 0; i < 120; ++i) {
      std::uint64_t k = 1 + rng() % std::min<std::uint64_t>(6, n);
      MultiSet a(g);
      if (rng() % 2) {
        // Lattice-like candidates: one translate per residue class.
        std::uint64_t step = n / k;
        if (n % k == 0) {
          for (std::uint64_t j = 0; j < k; ++j) a.add((j * step + (rng() % 3) * k * (rng() % step)) % n);
        }
      }
      if (!a.is_set() || a.size() != k) a = random_set(g, k, rng);
      auto got = find_spectrum(a);
      ASSERT_FALSE(got.exhausted());
      auto expect = oracle::lex_least_spectrum(a);
      ASSERT_EQ(got.found(), expect.has_value()) << to_string(a);
      if (expect) {
        ++spectral;
        EXPECT_EQ(as_u64(*got.witness), *expect) << to_string(a);
      }
    }
    EXPECT_GT(spectral, 10);
  }
}

TEST(FindSpectrum, BudgetExhaustionReported) {
  auto g = make_group(30);
  auto a = MultiSet::of(g, {0, 6, 12, 18, 24});
  auto r = find_spectrum(a, Budget{2});
  EXPECT_TRUE(r.exhausted());
  EXPECT_FALSE(r.witness.has_value());
}

TEST(GraphOverPrimes, Examples) {
  auto g = make_group(30);
  auto a = MultiSet::of(g, {0, 6, 12, 18, 24});
  auto over25 = graph_over_primes(a, {0, 2});
  ASSERT_TRUE(over25.has_value());
  EXPECT_EQ(over25->domain.size(), 5u);
  EXPECT_FALSE(over25->is_full(g));
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(over25->domain[i], (std::pair<std::uint64_t, std::uint64_t>{0, i}));
    EXPECT_EQ(over25->values[i], 0u);
  }
  EXPECT_FALSE(graph_over_primes(a, {0, 1}).has_value());  // 0 and 6 share (x mod 2, x mod 3)

  auto six = MultiSet::of(g, {0, 1, 2, 3, 4, 5});
  auto full = graph_over_primes(six, {0, 1});
  ASSERT_TRUE(full.has_value());
  EXPECT_TRUE(full->is_full(g));

  EXPECT_THROW(graph_over_primes(a, {1, 1}), Error);
  EXPECT_THROW(graph_over_primes(a, {0, 3}), Error);
  EXPECT_THROW(graph_over_primes(MultiSet::of(make_group(6), {0}), {0, 1}), Error);
}

TEST(GraphOverPrimes, FullGraphsTileAndSatisfyT1T2) {
  std::mt19937_64 rng(73);
  for (std::uint64_t n : {30u, 42u, 105u}) {
    auto g = make_group(n);
    for (int i = 0; i < 60; ++i) {
      std::array<std::size_t, 2> base{rng() % 3, 0};
      do base[1] = rng() % 3;
      while (base[1] == base[0]);
      std::uint64_t p = g.primes()[base[0]], q = g.primes()[base[1]];
      std::uint64_t r = n / (p * q);
      MultiSet a(g);
      for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
          a.add(oracle::from_residues(
              [&] {
                std::vector<std::uint64_t> c(3);
                c[base[0]] = x;
                c[base[1]] = y;
                c[3 - base[0] - base[1]] = rng() % r;
                return c;
              }(),
              {g.primes().begin(), g.primes().end()}));
      auto graph = graph_over_primes(a, base);
      ASSERT_TRUE(graph.has_value());
      EXPECT_TRUE(graph->is_full(g));
      EXPECT_TRUE(check_T1(a)) << to_string(a);
      EXPECT_TRUE(check_T2(a)) << to_string(a);
      std::vector<std::uint64_t> line;
      for (std::uint64_t j = 0; j < r; ++j) line.push_back(j * p * q);
      EXPECT_TRUE(oracle::tiles_with(a, line));
    }
  }
}
