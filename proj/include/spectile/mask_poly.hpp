#pragma once

// Mask polynomials A(X) = sum m_a X^a and their zeros at N-th roots of unity,
// decided exactly through cyclotomic divisibility.

#include <algorithm>
#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "spectile/cyclic_core.hpp"
#include "spectile/polynomial.hpp"

namespace spectile {

/// A(X) as an integer polynomial of degree < N.
inline IntPolynomial mask_polynomial(const MultiSet& a) {
  auto mult = a.multiplicities();
  return IntPolynomial(std::vector<std::int64_t>(mult.begin(), mult.end()));
}

namespace detail {

// A(omega_N^d) = 0 iff Phi_{N/d} divides A(X). Folding A mod X^m - 1 first
// (m = N/d) leaves the remainder mod Phi_m unchanged because Phi_m | X^m - 1.
inline bool vanishes_at_divisor(const MultiSet& a, std::uint64_t d,
                                std::vector<std::int64_t>& work) {
  std::uint64_t n = a.group().order();
  std::uint64_t m = n / d;
  work.assign(m, 0);
  auto mult = a.multiplicities();
  for (Element x = 0; x < n; ++x) {
    if (mult[x] != 0) work[x % m] += mult[x];
  }
  return remainder_is_zero_in_place(work, cyclotomic(m).coeffs());
}

}  // namespace detail

/// True iff A(omega_N^d) = 0, for a divisor d of N. d = N is accepted and
/// reports a zero only for the empty multiset, since A(1) = #A.
inline bool root_is_zero(const MultiSet& a, std::uint64_t d) {
  const auto& g = a.group();
  if (!g.divides_order(d)) {
    throw Error(ErrorKind::InvalidDivisor, std::to_string(d) + " does not divide N");
  }
  if (d == g.order()) return a.empty();
  std::vector<std::int64_t> work;
  return detail::vanishes_at_divisor(a, d, work);
}

struct ZeroProfile {
  std::uint64_t order = 0;
  /// Divisors d < N with A(omega_N^d) = 0, ascending.
  std::vector<std::uint64_t> divisor_zeros;
  /// Primes s | N with Phi_s | A(X), ascending (S_A; N is square-free).
  std::vector<std::uint64_t> s_a;
  /// full[n] != 0 iff A(omega_N^n) = 0.
  std::vector<std::uint8_t> full;

  bool contains(Element n) const noexcept { return full[n % order] != 0; }

  bool has_divisor_zero(std::uint64_t d) const noexcept {
    return std::binary_search(divisor_zeros.begin(), divisor_zeros.end(), d);
  }

  /// Z_A ascending.
  std::vector<Element> full_zeros() const {
    std::vector<Element> out;
    for (Element n = 0; n < order; ++n) {
      if (full[n]) out.push_back(n);
    }
    return out;
  }
};

inline ZeroProfile zero_profile(const MultiSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyMultiSet, "zero profile of an empty multiset");
  const auto& g = a.group();
  ZeroProfile z;
  z.order = g.order();
  z.full.assign(g.order(), 0);
  std::vector<std::int64_t> work;
  for (std::uint64_t d : g.divisors()) {
    if (d == g.order()) continue;
    if (detail::vanishes_at_divisor(a, d, work)) z.divisor_zeros.push_back(d);
  }
  // Unit-orbit closure: the zero set is stable under n -> n g for g a unit.
  for (std::uint64_t d : z.divisor_zeros) {
    for (Element u : g.units()) z.full[arith::mul_mod(d, u, g.order())] = 1;
  }
  for (std::uint64_t p : g.primes()) {
    if (z.has_divisor_zero(g.order() / p)) z.s_a.push_back(p);
  }
  return z;
}

/// Number of prime powers p^j | N with A(omega_N^{N/p^j}) = 0; at most 1
/// for square-free N.
inline std::uint64_t prime_power_zero_count(const MultiSet& a, std::uint64_t p) {
  const auto& g = a.group();
  if (g.prime_position(p) == g.rank()) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime factor of N");
  }
  return root_is_zero(a, g.order() / p) ? 1 : 0;
}

/// Floating-point A(omega_N^k), for diagnostics only.
inline std::complex<double> evaluate_at_root(const MultiSet& a, std::int64_t k) {
  const auto& g = a.group();
  Element e = g.normalize(k);
  std::complex<double> sum{0.0, 0.0};
  auto mult = a.multiplicities();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (mult[x] == 0) continue;
    double angle = step * static_cast<double>(arith::mul_mod(x, e, g.order()));
    sum += static_cast<double>(mult[x]) * std::polar(1.0, angle);
  }
  return sum;
}

/// A multiset together with its eagerly computed zero profile.
class AnalyzedSet {
 public:
  explicit AnalyzedSet(MultiSet set) : set_(std::move(set)), zeros_(zero_profile(set_)) {}

  const MultiSet& set() const noexcept { return set_; }
  const ZeroProfile& zeros() const noexcept { return zeros_; }
  const CyclicGroup& group() const noexcept { return set_.group(); }
  std::uint64_t size() const noexcept { return set_.size(); }

 private:
  MultiSet set_;
  ZeroProfile zeros_;
};

}  // namespace spectile
