#pragma once

// Tiling of Z_N by translation: the (T1)/(T2) conditions, tiling-pair
// verification, complement search, and the graph-form structure of tiles
// for square-free N with its constructive complement and spectrum.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "spectile/cyclic_core.hpp"
#include "spectile/mask_poly.hpp"
#include "spectile/search.hpp"
#include "spectile/spectral.hpp"

namespace spectile {

namespace detail {

inline void require_nonempty_set(const MultiSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyMultiSet, "expected a nonempty set");
  if (!a.is_set()) throw Error(ErrorKind::InvalidArgument, "expected a set, got a multiset");
}

}  // namespace detail

/// #A equals the product of Phi_s(1) = s over s in S_A.
inline bool check_T1(const AnalyzedSet& a) {
  detail::require_nonempty_set(a.set());
  std::uint64_t product = 1;
  for (std::uint64_t s : a.zeros().s_a) product *= s;
  return product == a.size();
}

/// Phi_{s_1...s_m} | A(X) for every choice of at least two elements of S_A.
inline bool check_T2(const AnalyzedSet& a) {
  detail::require_nonempty_set(a.set());
  const auto& s_a = a.zeros().s_a;
  const std::uint64_t n = a.group().order();
  const std::size_t count = s_a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) product *= s_a[i];
    }
    // Phi_m | A(X) iff A(omega_N^{N/m}) = 0.
    if (!a.zeros().has_divisor_zero(n / product)) return false;
  }
  return true;
}

inline bool check_T1(const MultiSet& a) { return check_T1(AnalyzedSet(a)); }
inline bool check_T2(const MultiSet& a) { return check_T2(AnalyzedSet(a)); }

struct TilingPair {
  MultiSet a;
  MultiSet t;
};

/// A(X) T(X) = 1 + X + ... + X^{N-1} mod X^N - 1, by polynomial product.
inline bool verify_tiling_pair_polynomial(const MultiSet& a, const MultiSet& t) {
  const std::uint64_t n = a.group().order();
  std::vector<std::uint64_t> prod(n, 0);
  auto ma = a.multiplicities();
  auto mt = t.multiplicities();
  for (Element i = 0; i < n; ++i) {
    if (ma[i] == 0) continue;
    for (Element j = 0; j < n; ++j) {
      if (mt[j] != 0) prod[(i + j) % n] += std::uint64_t{ma[i]} * mt[j];
    }
  }
  return std::all_of(prod.begin(), prod.end(), [](auto c) { return c == 1; });
}

/// Every x in Z_N has exactly one representation a + t.
inline bool verify_tiling_pair(const MultiSet& a, const MultiSet& t) {
  if (!(a.group() == t.group())) throw Error(ErrorKind::InvalidArgument, "group mismatch");
  const std::uint64_t n = a.group().order();
  std::vector<std::uint64_t> cover(n, 0);
  auto ea = a.elements();
  auto et = t.elements();
  bool ok = true;
  for (Element x : ea) {
    for (Element y : et) {
      if (++cover[(x + y) % n] > 1) ok = false;
    }
    if (!ok) break;
  }
  if (ok) ok = std::all_of(cover.begin(), cover.end(), [](auto c) { return c == 1; });
#ifdef SPECTILE_CROSS_CHECK
  if (ok != verify_tiling_pair_polynomial(a, t)) {
    throw Error(ErrorKind::Internal, "cover count and polynomial product disagree");
  }
#endif
  return ok;
}

namespace detail {

struct WordVectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : v) h = (h ^ w) * 0xff51afd7ed558ccdull ^ (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

class ComplementSearch {
 public:
  ComplementSearch(const MultiSet& a, Budget budget)
      : n_(a.group().order()), elems_(a.support()), counter_(budget),
        covered_((n_ + 63) / 64, 0) {}

  // Feasibility: branch on the uncovered element with the fewest free
  // translates covering it.
  SearchStatus exists() {
    reset();
    return complete();
  }

  // Lex-least complement containing 0: translates chosen in ascending order.
  SearchStatus lex_least(std::vector<Element>& out) {
    reset();
    chosen_.assign(1, 0);
    SearchStatus s = ascend(0);
    if (s == SearchStatus::Found) out = chosen_;
    return s;
  }

  std::uint64_t nodes() const noexcept { return counter_.used(); }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

  bool test(Element x) const noexcept { return covered_[x >> 6] >> (x & 63) & 1; }
  void flip(Element x) noexcept { covered_[x >> 6] ^= std::uint64_t{1} << (x & 63); }

  bool fits(Element t) const noexcept {
    return std::none_of(elems_.begin(), elems_.end(), [&](Element a) { return test((a + t) % n_); });
  }
  void place(Element t) noexcept {
    for (Element a : elems_) flip((a + t) % n_);
    uncovered_ -= elems_.size();
  }
  void lift(Element t) noexcept {
    for (Element a : elems_) flip((a + t) % n_);
    uncovered_ += elems_.size();
  }

  void reset() {
    std::fill(covered_.begin(), covered_.end(), 0);
    uncovered_ = n_;
    place(0);
  }

  Element smallest_uncovered() const noexcept {
    for (std::size_t w = 0; w < covered_.size(); ++w) {
      std::uint64_t free = ~covered_[w];
      if (free != 0) return w * 64 + static_cast<Element>(std::countr_zero(free));
    }
    return n_;
  }

  SearchStatus complete() {
    if (!counter_.tick()) return SearchStatus::Exhausted;
    if (uncovered_ == 0) return SearchStatus::Found;
    if (failed_.contains(covered_)) return SearchStatus::Infeasible;
    Element best = n_;
    std::size_t best_options = elems_.size() + 1;
    for (Element y = 0; y < n_ && best_options > 1; ++y) {
      if (test(y)) continue;
      std::size_t options = 0;
      for (Element a : elems_) options += fits((y + n_ - a) % n_);
      if (options < best_options) {
        best = y;
        best_options = options;
      }
    }
    if (best_options > 0) {
      for (Element a : elems_) {
        Element t = (best + n_ - a) % n_;
        if (!fits(t)) continue;
        place(t);
        SearchStatus s = complete();
        lift(t);
        if (s != SearchStatus::Infeasible) return s;
      }
    }
    if (failed_.size() < kMemoCap) failed_.insert(covered_);
    return SearchStatus::Infeasible;
  }

  SearchStatus ascend(Element last) {
    if (!counter_.tick()) return SearchStatus::Exhausted;
    if (uncovered_ == 0) return SearchStatus::Found;
    std::vector<Element> avail;
    for (Element t = last + 1; t < n_; ++t) {
      if (fits(t)) avail.push_back(t);
    }
    if (avail.size() * elems_.size() < uncovered_) return SearchStatus::Infeasible;
    // Every uncovered element needs an available translate.
    std::vector<std::uint64_t> reach(covered_);
    for (Element t : avail) {
      for (Element a : elems_) {
        Element y = (a + t) % n_;
        reach[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
    }
    for (Element y = 0; y < n_; ++y) {
      if (!(reach[y >> 6] >> (y & 63) & 1)) return SearchStatus::Infeasible;
    }
    // The smallest uncovered element is covered by some later choice, so the
    // next choice cannot exceed the largest translate that covers it.
    Element x = smallest_uncovered();
    Element bound = 0;
    bool any = false;
    for (Element a : elems_) {
      Element t = (x + n_ - a) % n_;
      if (std::binary_search(avail.begin(), avail.end(), t)) {
        bound = any ? std::max(bound, t) : t;
        any = true;
      }
    }
    if (!any) return SearchStatus::Infeasible;
    if (SearchStatus s = complete(); s != SearchStatus::Found) return s;
    for (Element t : avail) {
      if (t > bound) break;
      place(t);
      chosen_.push_back(t);
      SearchStatus s = ascend(t);
      if (s != SearchStatus::Infeasible) return s;
      chosen_.pop_back();
      lift(t);
    }
    return SearchStatus::Infeasible;
  }

  std::uint64_t n_;
  std::vector<Element> elems_;
  NodeCounter counter_;
  std::vector<std::uint64_t> covered_;
  std::uint64_t uncovered_ = 0;
  std::vector<Element> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, WordVectorHash> failed_;
};

}  // namespace detail

/// Lex-least T with 0 in T and A + T = Z_N, or Infeasible.
inline SearchResult<MultiSet> find_tiling_complement(const MultiSet& a, Budget budget = {}) {
  detail::require_nonempty_set(a);
  SearchResult<MultiSet> result;
  if (a.group().order() % a.size() != 0) {
    result.status = SearchStatus::Infeasible;
    return result;
  }
  detail::ComplementSearch search(a, budget);
  result.status = search.exists();
  if (result.found()) {
    std::vector<Element> t;
    result.status = search.lex_least(t);
    if (result.found()) result.witness = MultiSet::of_elements(a.group(), t);
  }
  result.nodes = search.nodes();
  return result;
}

/// A = {(n, y_n) : n in Z_B} in the decomposition Z_N = Z_B x Z_{N/B}, where
/// B is the product of the first `ell` primes of `permutation`.
/// assignment[b] is the Z_{N/B} coordinate paired with b in Z_B.
struct GraphForm {
  std::vector<std::uint64_t> permutation;
  std::size_t ell = 0;
  std::vector<std::uint64_t> assignment;

  std::uint64_t base_order() const {
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < ell; ++i) b *= permutation[i];
    return b;
  }

  MultiSet reconstruct(const CyclicGroup& g) const {
    std::uint64_t base = base_order();
    std::uint64_t rest = g.order() / base;
    if (assignment.size() != base) {
      throw Error(ErrorKind::InvalidArgument, "assignment must be total on the base");
    }
    MultiSet out(g);
    for (std::uint64_t b = 0; b < base; ++b) {
      if (assignment[b] >= rest) throw Error(ErrorKind::InvalidArgument, "assignment out of range");
      out.add(arith::crt_pair(b, base, assignment[b], rest));
    }
    return out;
  }
};

/// Tries every set of base primes, fewest first and then in ascending
/// position order. The empty base (ell = 0) covers singletons.
inline std::optional<GraphForm> detect_graph_form(const MultiSet& a) {
  detail::require_nonempty_set(a);
  const auto& g = a.group();
  const std::size_t k = g.rank();
  std::vector<std::uint64_t> masks(std::uint64_t{1} << k);
  std::iota(masks.begin(), masks.end(), 0);
  auto positions = [k](std::uint64_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) out.push_back(i);
    }
    return out;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint64_t x, std::uint64_t y) {
    int cx = std::popcount(x), cy = std::popcount(y);
    if (cx != cy) return cx < cy;
    return positions(x) < positions(y);
  });
  auto support = a.support();
  for (std::uint64_t mask : masks) {
    std::uint64_t base = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) base *= g.primes()[i];
    }
    if (base != a.size()) continue;
    std::uint64_t rest = g.order() / base;
    std::vector<std::uint64_t> assignment(base, 0);
    std::vector<std::uint8_t> hit(base, 0);
    bool bijective = true;
    for (Element x : support) {
      std::uint64_t b = x % base;
      if (hit[b]) {
        bijective = false;
        break;
      }
      hit[b] = 1;
      assignment[b] = x % rest;
    }
    if (!bijective) continue;
    GraphForm gf;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) gf.permutation.push_back(g.primes()[i]);
    }
    gf.ell = gf.permutation.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) gf.permutation.push_back(g.primes()[i]);
    }
    gf.assignment = std::move(assignment);
    return gf;
  }
  return std::nullopt;
}

/// T = {x : x = 0 mod B}: the elements whose base coordinates vanish.
inline MultiSet complement_from_graph(const GraphForm& gf, const CyclicGroup& g) {
  std::uint64_t base = gf.base_order();
  MultiSet t(g);
  for (Element x = 0; x < g.order(); x += base) t.add(x);
  if (!verify_tiling_pair(gf.reconstruct(g), t)) {
    throw Error(ErrorKind::Internal, "graph-form complement failed verification");
  }
  return t;
}

/// (nA, T) for a tiling pair (A, T) with gcd(n, #A) = 1.
inline TilingPair scaled_tiling(std::uint64_t n, const TilingPair& pair) {
  if (std::gcd(n, pair.a.size()) != 1) {
    throw Error(ErrorKind::PreconditionViolated, "gcd(n, #A) != 1");
  }
  TilingPair out{scale_multiset(n, pair.a), pair.t};
  if (!out.a.is_set() || !verify_tiling_pair(out.a, out.t)) {
    throw Error(ErrorKind::Internal, "scaled tiling pair failed verification");
  }
  return out;
}

/// B = { sum_{s in S_A} c_s N/s : 0 <= c_s < s } for a set with (T1) and (T2).
inline MultiSet spectrum_from_T1T2(const AnalyzedSet& a) {
  if (!check_T1(a) || !check_T2(a)) {
    throw Error(ErrorKind::PreconditionViolated, "set does not satisfy (T1) and (T2)");
  }
  const auto& g = a.group();
  std::vector<Element> points{0};
  for (std::uint64_t s : a.zeros().s_a) {
    std::vector<Element> next;
    for (Element x : points) {
      for (std::uint64_t c = 0; c < s; ++c) next.push_back((x + c * (g.order() / s)) % g.order());
    }
    points = std::move(next);
  }
  MultiSet b = MultiSet::of_elements(g, points);
  if (!verify_spectral_pair(a, b)) {
    throw Error(ErrorKind::Internal, "constructed spectrum failed verification");
  }
  return b;
}

inline MultiSet spectrum_from_T1T2(const MultiSet& a) { return spectrum_from_T1T2(AnalyzedSet(a)); }

}  // namespace spectile
