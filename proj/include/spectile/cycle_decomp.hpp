#pragma once

// Vanishing sums as unions of prime cycles: exact decomposition search, the
// two-prime structure of scaled multisets, the Lam-Leung size condition and
// the three-prime counterexample family.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "spectile/cyclic_core.hpp"
#include "spectile/mask_poly.hpp"
#include "spectile/search.hpp"

namespace spectile {

struct CycleDecomposition {
  std::vector<Cycle> cycles;

  MultiSet reconstruct(const CyclicGroup& g) const {
    MultiSet out(g);
    std::uint64_t n = g.order();
    for (const Cycle& c : cycles) {
      for (std::uint64_t i = 0; i < c.d; ++i) out.add((c.base + i * (n / c.d)) % n);
    }
    return out;
  }
};

namespace detail {

struct CountVectorHash {
  std::size_t operator()(const std::vector<MultiSet::Count>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto c : v) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class PrimeCycleSearch {
 public:
  PrimeCycleSearch(const CyclicGroup& g, std::span<const std::uint64_t> primes, Budget budget)
      : n_(g.order()), primes_(primes.begin(), primes.end()), counter_(budget) {}

  SearchStatus run(std::vector<MultiSet::Count>& residual, std::vector<Cycle>& out) {
    if (!counter_.tick()) return SearchStatus::Exhausted;
    auto first = std::find_if(residual.begin(), residual.end(), [](auto c) { return c != 0; });
    if (first == residual.end()) return SearchStatus::Found;
    if (failed_.contains(residual)) return SearchStatus::Infeasible;

    // The smallest remaining element lies on exactly one line per prime.
    auto x = static_cast<Element>(first - residual.begin());
    for (std::uint64_t p : primes_) {
      std::uint64_t step = n_ / p;
      Element base = x % step;
      bool fits = true;
      for (std::uint64_t i = 0; i < p && fits; ++i) fits = residual[base + i * step] != 0;
      if (!fits) continue;
      for (std::uint64_t i = 0; i < p; ++i) --residual[base + i * step];
      out.push_back(Cycle{p, base});
      SearchStatus s = run(residual, out);
      if (s != SearchStatus::Infeasible) return s;
      out.pop_back();
      for (std::uint64_t i = 0; i < p; ++i) ++residual[base + i * step];
    }
    if (failed_.size() < kMemoCap) failed_.insert(residual);
    return SearchStatus::Infeasible;
  }

  std::uint64_t nodes() const noexcept { return counter_.used(); }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

  std::uint64_t n_;
  std::vector<std::uint64_t> primes_;
  NodeCounter counter_;
  std::unordered_set<std::vector<MultiSet::Count>, CountVectorHash> failed_;
};

}  // namespace detail

/// Decomposes M into p-cycles for p in `primes`, if possible. Cycles are
/// tried smallest element first, primes ascending.
inline SearchResult<CycleDecomposition> decompose_prime_cycles(
    const MultiSet& m, std::span<const std::uint64_t> primes, Budget budget = {}) {
  const auto& g = m.group();
  if (primes.empty()) throw Error(ErrorKind::InvalidArgument, "prime list is empty");
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::uint64_t p : sorted) {
    if (g.prime_position(p) == g.rank()) {
      throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime factor of N");
    }
  }
  std::vector<MultiSet::Count> residual(m.multiplicities().begin(), m.multiplicities().end());
  detail::PrimeCycleSearch search(g, sorted, budget);
  CycleDecomposition dec;
  SearchResult<CycleDecomposition> result;
  result.status = search.run(residual, dec.cycles);
  result.nodes = search.nodes();
  if (result.found()) result.witness = std::move(dec);
  return result;
}

/// Nonnegative P, Q with
///   A(X^n) = P(X^n) Phi_p(X^{N/p}) + Q(X^n) Phi_q(X^{N/q})  mod X^N - 1.
/// p_coeffs[e] is the weight of the p-cycle through n·e; likewise q_coeffs.
/// When N/n is prime, q = 0 and q_coeffs is empty.
struct TwoPrimeWitness {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> p_coeffs;
  std::vector<std::uint64_t> q_coeffs;

  bool q_is_zero() const noexcept {
    return std::all_of(q_coeffs.begin(), q_coeffs.end(), [](auto c) { return c == 0; });
  }

  /// Coefficients of the right-hand side reduced mod X^N - 1.
  std::vector<std::uint64_t> reconstruct(const CyclicGroup& g) const {
    std::uint64_t big = g.order();
    std::vector<std::uint64_t> out(big, 0);
    auto add_cycles = [&](const std::vector<std::uint64_t>& coeffs, std::uint64_t prime) {
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        for (std::uint64_t i = 0; i < prime; ++i) {
          out[(n * e + i * (big / prime)) % big] += coeffs[e];
        }
      }
    };
    add_cycles(p_coeffs, p);
    if (q != 0) add_cycles(q_coeffs, q);
    return out;
  }
};

/// Decomposes n·A into p- and q-cycles for N/n = pq (or N/n = p). Returns
/// nullopt only if no nonnegative decomposition exists.
inline std::optional<TwoPrimeWitness> two_prime_decompose(const MultiSet& a, std::uint64_t n) {
  const auto& g = a.group();
  if (n == 0 || n >= g.order() || !g.divides_order(n)) {
    throw Error(ErrorKind::InvalidDivisor, std::to_string(n) + " is not a proper divisor of N");
  }
  std::uint64_t m = g.order() / n;
  auto sub = arith::factorize(m).primes;
  if (sub.size() > 2) {
    throw Error(ErrorKind::PreconditionViolated, "N/n has more than two prime divisors");
  }
  if (!root_is_zero(a, n)) throw Error(ErrorKind::PreconditionViolated, "A(omega_N^n) != 0");

  MultiSet scaled = scale_multiset(n, a);
  // Weight of n·e for e in Z_m.
  auto weight = [&](std::uint64_t e) -> std::int64_t { return scaled.count(n * e); };

  TwoPrimeWitness w;
  w.n = n;
  w.p = sub[0];
  if (sub.size() == 1) {
    std::int64_t c = weight(0);
    for (std::uint64_t e = 1; e < m; ++e) {
      if (weight(e) != c) return std::nullopt;
    }
    w.p_coeffs = {static_cast<std::uint64_t>(c)};
    return w;
  }

  // e <-> (x, y) = (e mod p, e mod q); a p-cycle fixes y, a q-cycle fixes x.
  // Solve M(x, y) = c(y) + d(x) with min d = 0, which maximizes the p-cycle part.
  std::uint64_t p = sub[0], q = sub[1];
  w.q = q;
  std::vector<std::int64_t> by_xy(p * q);
  for (std::uint64_t e = 0; e < m; ++e) by_xy[(e % p) * q + e % q] = weight(e);
  auto at = [&](std::uint64_t x, std::uint64_t y) { return by_xy[x * q + y]; };

  std::vector<std::int64_t> d(p);
  for (std::uint64_t x = 0; x < p; ++x) d[x] = at(x, 0) - at(0, 0);
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      if (at(x, y) - at(0, y) != d[x]) return std::nullopt;
    }
  }
  std::int64_t shift = *std::min_element(d.begin(), d.end());
  w.q_coeffs.resize(p);
  for (std::uint64_t x = 0; x < p; ++x) w.q_coeffs[x] = static_cast<std::uint64_t>(d[x] - shift);
  w.p_coeffs.resize(q);
  for (std::uint64_t y = 0; y < q; ++y) {
    std::int64_t c = at(0, y) - (d[0] - shift);
    if (c < 0) return std::nullopt;
    w.p_coeffs[y] = static_cast<std::uint64_t>(c);
  }
  return w;
}

/// Nonnegative n_p with sum n_p p = size, maximizing the coefficients of
/// the smaller primes first; nullopt if no such combination exists.
inline std::optional<std::vector<std::uint64_t>> lam_leung_feasible(
    std::uint64_t size, std::span<const std::uint64_t> primes) {
  const std::size_t k = primes.size();
  for (std::uint64_t p : primes) {
    if (p == 0) throw Error(ErrorKind::InvalidArgument, "primes must be positive");
  }
  // reach[i][s]: s is a nonnegative combination of primes[i..].
  std::vector<std::vector<std::uint8_t>> reach(k + 1, std::vector<std::uint8_t>(size + 1, 0));
  reach[k][0] = 1;
  for (std::size_t i = k; i-- > 0;) {
    for (std::uint64_t s = 0; s <= size; ++s) {
      reach[i][s] = reach[i + 1][s] || (s >= primes[i] && reach[i][s - primes[i]]);
    }
  }
  if (!reach[0][size]) return std::nullopt;
  std::vector<std::uint64_t> coeffs(k, 0);
  std::uint64_t rest = size;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t c = rest / primes[i];
    while (!reach[i + 1][rest - c * primes[i]]) --c;
    coeffs[i] = c;
    rest -= c * primes[i];
  }
  return coeffs;
}

/// The multiset with mask polynomial
///   (X^{qr} + ... + X^{(p-1)qr})(X^{pr} + ... + X^{(q-1)pr}) + (X^{pq} + ... + X^{(r-1)pq})
/// in Z_{pqr}. It vanishes at omega_{pqr} but is not a union of prime cycles.
inline MultiSet counterexample_multiset(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  if (!arith::is_prime(p) || !arith::is_prime(q) || !arith::is_prime(r) || p == q || q == r ||
      p == r) {
    throw Error(ErrorKind::InvalidPrimes, "expected three distinct primes");
  }
  auto g = make_group(p * q * r, std::max<std::uint64_t>(kDefaultOrderCap, p * q * r));
  std::uint64_t n = g.order();
  MultiSet out(g);
  for (std::uint64_t i = 1; i < p; ++i) {
    for (std::uint64_t j = 1; j < q; ++j) out.add((i * q * r + j * p * r) % n);
  }
  for (std::uint64_t l = 1; l < r; ++l) out.add((l * p * q) % n);
  return out;
}

/// For the prime ordering `order` (a permutation of the group's primes) and
/// 2 <= m <= k, looks for a subset of A whose image under scaling by
/// order[m-1] ... order[k-1] is an order[0]-cycle: one element per first
/// coordinate, all sharing coordinates 2..m-1. Returns the subset built from
/// the smallest qualifying element of each first-coordinate class in the
/// first qualifying group.
inline std::optional<MultiSet> has_prime_cycle_in_scaled(const MultiSet& a,
                                                         std::span<const std::uint64_t> order,
                                                         std::size_t m) {
  const auto& g = a.group();
  const std::size_t k = g.rank();
  {
    std::vector<std::uint64_t> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.primes().begin(), g.primes().end())) {
      throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation of the primes");
    }
  }
  if (m < 2 || m > k) throw Error(ErrorKind::InvalidArgument, "m must satisfy 2 <= m <= k");

  std::uint64_t first = order[0];
  // Coordinates 2..m-1 are captured jointly by the residue mod their product.
  std::uint64_t middle = 1;
  for (std::size_t j = 1; j + 1 < m; ++j) middle *= order[j];

  auto support = a.support();
  std::vector<std::vector<Element>> groups(middle);
  for (Element x : support) groups[x % middle].push_back(x);
  for (const auto& members : groups) {
    std::vector<std::optional<Element>> pick(first);
    for (Element x : members) {
      auto& slot = pick[x % first];
      if (!slot) slot = x;
    }
    if (std::all_of(pick.begin(), pick.end(), [](const auto& s) { return s.has_value(); })) {
      MultiSet witness(g);
      for (const auto& s : pick) witness.add(*s);
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace spectile
