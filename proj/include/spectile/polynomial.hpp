#pragma once

// Dense integer polynomials with overflow-checked 64-bit coefficients, and
// memoized cyclotomic polynomials.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spectile/cyclic_core.hpp"
#include "spectile/error.hpp"

namespace spectile {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow");
  return r;
}

}  // namespace detail

/// coeffs[i] is the coefficient of X^i; no trailing zeros, so the zero
/// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(std::size_t degree, std::int64_t c = 1) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::int64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (std::int64_t c : coeffs_) s = detail::checked_add(s, c);
    return s;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = detail::checked_add(a.coeff(i), b.coeff(i));
    }
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = detail::checked_sub(a.coeff(i), b.coeff(i));
    }
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] =
            detail::checked_add(out[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::int64_t i = degree(); i >= 0; --i) {
      std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += "X";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Schoolbook division by a monic divisor; stays in the integers.
inline DivisionResult divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero() || den.leading() != 1) {
    throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
  }
  std::vector<std::int64_t> rem(num.coeffs().begin(), num.coeffs().end());
  auto dd = static_cast<std::size_t>(den.degree());
  if (rem.size() <= dd) return {IntPolynomial{}, num};
  std::vector<std::int64_t> quot(rem.size() - dd, 0);
  auto dc = den.coeffs();
  for (std::size_t i = rem.size(); i-- > dd;) {
    std::int64_t q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = detail::checked_sub(rem[i - dd + j], detail::checked_mul(q, dc[j]));
    }
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace detail {

// Remainder of the polynomial with coefficients `work` (modified in place) by
// the monic `den`; returns true iff the remainder vanishes.
inline bool remainder_is_zero_in_place(std::vector<std::int64_t>& work,
                                       std::span<const std::int64_t> den) {
  std::size_t dd = den.size() - 1;
  for (std::size_t i = work.size(); i-- > dd;) {
    std::int64_t q = work[i];
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      work[i - dd + j] = checked_sub(work[i - dd + j], checked_mul(q, den[j]));
    }
  }
  for (std::size_t i = 0; i < std::min(dd, work.size()); ++i) {
    if (work[i] != 0) return false;
  }
  return true;
}

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  const IntPolynomial& get(std::uint64_t n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(n); it != table_.end()) return *it->second;
    }
    // Computed outside the lock; a concurrent duplicate computation yields the
    // same polynomial and the first insertion wins.
    auto value = std::make_shared<const IntPolynomial>(compute(n));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = table_.emplace(n, std::move(value));
    return *it->second;
  }

 private:
  IntPolynomial compute(std::uint64_t n) {
    // X^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<std::int64_t> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    IntPolynomial acc(std::move(c));
    for (std::uint64_t d : arith::divisors(n)) {
      if (d == n) continue;
      auto res = divide_monic(acc, get(d));
      if (!res.remainder.is_zero()) throw Error(ErrorKind::Internal, "inexact cyclotomic division");
      acc = std::move(res.quotient);
    }
    return acc;
  }

  std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const IntPolynomial>> table_;
};

}  // namespace detail

/// Phi_n, memoized for the lifetime of the process. Thread-safe.
inline const IntPolynomial& cyclotomic(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  return detail::CyclotomicCache::instance().get(n);
}

}  // namespace spectile
