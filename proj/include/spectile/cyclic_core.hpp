#pragma once

// Arithmetic in Z_N for square-free N: factorization, units, the CRT
// coordinate isomorphism, multisets and d-cycles.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spectile/error.hpp"

namespace spectile {

using Element = std::uint64_t;

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

namespace arith {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime factors in ascending order, with a flag telling whether any
// of them divides n more than once.
struct Factorization {
  std::vector<std::uint64_t> primes;
  bool square_free = true;
};

inline Factorization factorize(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    f.primes.push_back(d);
    n /= d;
    if (n % d == 0) {
      f.square_free = false;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.primes.push_back(n);
  return f;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : factorize(n).primes) result = result / p * (p - 1);
  return result;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Inverse of a modulo m; a and m must be coprime.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "value not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// The x in [0, m1*m2) with x = r1 mod m1 and x = r2 mod m2 (m1, m2 coprime).
inline std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                              std::uint64_t m2) {
  if (m1 == 1) return r2 % m2;
  if (m2 == 1) return r1 % m1;
  std::uint64_t m = m1 * m2;
  std::uint64_t e1 = mul_mod(m2, inverse_mod(m2 % m1, m1), m);  // 1 mod m1, 0 mod m2
  std::uint64_t e2 = mul_mod(m1, inverse_mod(m1 % m2, m2), m);  // 0 mod m1, 1 mod m2
  return (mul_mod(e1, r1 % m1, m) + mul_mod(e2, r2 % m2, m)) % m;
}

}  // namespace arith

/// Z_N with N square-free, together with its ascending prime factorization.
/// Copies are cheap: the factorization data is shared and immutable.
class CyclicGroup {
 public:
  static CyclicGroup make(std::uint64_t order, std::uint64_t cap = kDefaultOrderCap) {
    if (order < 2) throw Error(ErrorKind::InvalidArgument, "group order must be at least 2");
    if (order > cap) {
      throw Error(ErrorKind::InvalidArgument,
                  "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    }
    auto f = arith::factorize(order);
    if (!f.square_free) {
      throw Error(ErrorKind::NotSquareFree, std::to_string(order) + " is not square-free");
    }
    auto data = std::make_shared<Data>();
    data->order = order;
    data->primes = std::move(f.primes);
    data->divisors = arith::divisors(order);
    for (std::uint64_t p : data->primes) {
      std::uint64_t cofactor = order / p;
      data->crt_basis.push_back(
          arith::mul_mod(cofactor, arith::inverse_mod(cofactor % p, p), order));
    }
    for (Element x = 1; x < order; ++x) {
      if (std::gcd(x, order) == 1) data->units.push_back(x);
    }
    return CyclicGroup(std::move(data));
  }

  std::uint64_t order() const noexcept { return data_->order; }
  std::span<const std::uint64_t> primes() const noexcept { return data_->primes; }
  std::size_t rank() const noexcept { return data_->primes.size(); }
  /// Ascending divisors of N, including 1 and N.
  std::span<const std::uint64_t> divisors() const noexcept { return data_->divisors; }
  /// e_j with e_j = 1 mod p_j and 0 mod every other prime.
  std::span<const std::uint64_t> crt_basis() const noexcept { return data_->crt_basis; }

  std::uint64_t euler_phi() const noexcept { return data_->units.size(); }

  /// Z_N^*, ascending.
  std::span<const Element> units() const noexcept { return data_->units; }

  Element normalize(std::int64_t x) const noexcept {
    auto n = static_cast<std::int64_t>(data_->order);
    std::int64_t r = x % n;
    return static_cast<Element>(r < 0 ? r + n : r);
  }

  bool divides_order(std::uint64_t d) const noexcept { return d != 0 && data_->order % d == 0; }

  /// Position of p in primes(), or rank() if p is not a factor.
  std::size_t prime_position(std::uint64_t p) const noexcept {
    auto it = std::find(data_->primes.begin(), data_->primes.end(), p);
    return static_cast<std::size_t>(it - data_->primes.begin());
  }

  friend bool operator==(const CyclicGroup& a, const CyclicGroup& b) noexcept {
    return a.order() == b.order();
  }

 private:
  struct Data {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> divisors;
    std::vector<std::uint64_t> crt_basis;
    std::vector<Element> units;
  };

  explicit CyclicGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline CyclicGroup make_group(std::uint64_t order, std::uint64_t cap = kDefaultOrderCap) {
  return CyclicGroup::make(order, cap);
}

struct ResidueVector {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

inline ResidueVector to_crt(Element x, const CyclicGroup& g) {
  ResidueVector v;
  v.coords.reserve(g.rank());
  x %= g.order();
  for (std::uint64_t p : g.primes()) v.coords.push_back(x % p);
  return v;
}

inline Element from_crt(const ResidueVector& v, const CyclicGroup& g) {
  if (v.coords.size() != g.rank()) {
    throw Error(ErrorKind::InvalidArgument, "residue vector length does not match group rank");
  }
  std::uint64_t n = g.order();
  std::uint64_t x = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (v.coords[j] >= g.primes()[j]) {
      throw Error(ErrorKind::InvalidArgument, "residue coordinate out of range");
    }
    x = (x + arith::mul_mod(g.crt_basis()[j], v.coords[j], n)) % n;
  }
  return x;
}

/// Z_N^*, ascending.
inline std::vector<Element> units(const CyclicGroup& g) {
  return {g.units().begin(), g.units().end()};
}

/// Multiplicity vector over Z_N. Multiplicities are capped at 2^20.
class MultiSet {
 public:
  using Count = std::uint32_t;
  static constexpr Count kMaxMultiplicity = Count{1} << 20;

  explicit MultiSet(CyclicGroup group) : group_(std::move(group)), mult_(group_.order(), 0) {}

  MultiSet(CyclicGroup group, std::vector<Count> mult)
      : group_(std::move(group)), mult_(std::move(mult)) {
    if (mult_.size() != group_.order()) {
      throw Error(ErrorKind::InvalidArgument, "multiplicity vector length must equal N");
    }
    for (Count c : mult_) {
      if (c > kMaxMultiplicity) throw Error(ErrorKind::Overflow, "multiplicity exceeds cap");
      size_ += c;
    }
  }

  /// Elements are reduced mod N; repeated elements accumulate multiplicity.
  static MultiSet of(const CyclicGroup& group, std::span<const std::int64_t> elements) {
    MultiSet m(group);
    for (std::int64_t x : elements) m.add(group.normalize(x));
    return m;
  }

  static MultiSet of(const CyclicGroup& group, std::initializer_list<std::int64_t> elements) {
    return of(group, std::span<const std::int64_t>(elements.begin(), elements.size()));
  }

  static MultiSet of_elements(const CyclicGroup& group, std::span<const Element> elements) {
    MultiSet m(group);
    for (Element x : elements) m.add(x % group.order());
    return m;
  }

  static MultiSet full(const CyclicGroup& group) {
    return MultiSet(group, std::vector<Count>(group.order(), 1));
  }

  const CyclicGroup& group() const noexcept { return group_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool is_set() const noexcept {
    return std::all_of(mult_.begin(), mult_.end(), [](Count c) { return c <= 1; });
  }

  Count count(Element x) const noexcept { return mult_[x % group_.order()]; }
  bool contains(Element x) const noexcept { return count(x) != 0; }
  std::span<const Count> multiplicities() const noexcept { return mult_; }

  void add(Element x, Count times = 1) {
    Count& c = mult_[x % group_.order()];
    if (c + static_cast<std::uint64_t>(times) > kMaxMultiplicity) {
      throw Error(ErrorKind::Overflow, "multiplicity exceeds cap");
    }
    c += times;
    size_ += times;
  }

  void remove(Element x, Count times = 1) {
    Count& c = mult_[x % group_.order()];
    if (c < times) throw Error(ErrorKind::InvalidArgument, "removing absent element");
    c -= times;
    size_ -= times;
  }

  /// Ascending, each element repeated by its multiplicity.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (Element x = 0; x < mult_.size(); ++x) out.insert(out.end(), mult_[x], x);
    return out;
  }

  /// Ascending distinct elements.
  std::vector<Element> support() const {
    std::vector<Element> out;
    for (Element x = 0; x < mult_.size(); ++x) {
      if (mult_[x] != 0) out.push_back(x);
    }
    return out;
  }

  friend bool operator==(const MultiSet& a, const MultiSet& b) noexcept {
    return a.group_ == b.group_ && a.mult_ == b.mult_;
  }

 private:
  CyclicGroup group_;
  std::vector<Count> mult_;
  std::uint64_t size_ = 0;
};

/// Set literal form, e.g. {0^2,15}.
inline std::string to_string(const MultiSet& a) {
  std::string out = "{";
  for (Element x : a.support()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(x);
    if (a.count(x) > 1) out += "^" + std::to_string(a.count(x));
  }
  return out + "}";
}

/// The d-element coset {j, j + N/d, ..., j + (d-1)N/d}.
struct Cycle {
  std::uint64_t d = 0;
  Element base = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline Cycle make_cycle(const CyclicGroup& g, std::uint64_t d, Element j) {
  if (d < 2 || !g.divides_order(d)) {
    throw Error(ErrorKind::InvalidDivisor, std::to_string(d) + " is not a divisor >= 2 of N");
  }
  return Cycle{d, j % g.order()};
}

inline MultiSet cycle_elements(const CyclicGroup& g, const Cycle& c) {
  if (c.d < 2 || !g.divides_order(c.d)) {
    throw Error(ErrorKind::InvalidDivisor, std::to_string(c.d) + " is not a divisor >= 2 of N");
  }
  MultiSet out(g);
  std::uint64_t step = g.order() / c.d;
  for (std::uint64_t i = 0; i < c.d; ++i) out.add((c.base + i * step) % g.order());
  return out;
}

/// n·A: the image of every element under x -> n x, multiplicities summed.
inline MultiSet scale_multiset(std::uint64_t n, const MultiSet& a) {
  const auto& g = a.group();
  std::vector<MultiSet::Count> out(g.order(), 0);
  auto mult = a.multiplicities();
  for (Element x = 0; x < g.order(); ++x) {
    if (mult[x] == 0) continue;
    out[arith::mul_mod(n, x, g.order())] += mult[x];
  }
  return MultiSet(g, std::move(out));
}

inline MultiSet translate(const MultiSet& a, std::int64_t t) {
  const auto& g = a.group();
  Element shift = g.normalize(t);
  std::vector<MultiSet::Count> out(g.order(), 0);
  auto mult = a.multiplicities();
  for (Element x = 0; x < g.order(); ++x) out[(x + shift) % g.order()] = mult[x];
  return MultiSet(g, std::move(out));
}

/// The image of A under x -> u x + t.
inline MultiSet affine_image(const MultiSet& a, std::uint64_t u, std::int64_t t) {
  return translate(scale_multiset(u, a), t);
}

}  // namespace spectile
