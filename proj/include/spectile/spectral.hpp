#pragma once

// Spectral pairs in Z_N: exact verification, the complex Hadamard view,
// spectrum search as a clique search, and graph structure over two primes.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "spectile/cyclic_core.hpp"
#include "spectile/mask_poly.hpp"
#include "spectile/search.hpp"

namespace spectile {

struct SpectralPair {
  MultiSet a;
  MultiSet b;
};

/// #A = #B and every nonzero difference of B lies in Z_A.
inline bool verify_spectral_pair(const AnalyzedSet& a, const MultiSet& b) {
  if (b.empty() || !b.is_set() || !a.set().is_set()) return false;
  if (a.size() != b.size()) return false;
  auto elems = b.support();
  const std::uint64_t n = a.group().order();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (!a.zeros().contains((elems[i] + n - elems[j]) % n)) return false;
    }
  }
  return true;
}

inline bool verify_spectral_pair(const MultiSet& a, const MultiSet& b) {
  if (a.empty()) return false;
  return verify_spectral_pair(AnalyzedSet(a), b);
}

/// max |(M conj(M)^T)_{b,b'} - #A δ_{b,b'}| for M = (omega_N^{b a}).
inline double hadamard_gram_deviation(const MultiSet& a, const MultiSet& b) {
  const auto& g = a.group();
  auto ea = a.support();
  auto eb = b.support();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(g.order());
  std::vector<std::vector<std::complex<double>>> rows(eb.size());
  for (std::size_t i = 0; i < eb.size(); ++i) {
    rows[i].reserve(ea.size());
    for (Element x : ea) {
      rows[i].push_back(std::polar(1.0, step * static_cast<double>(
                                                   arith::mul_mod(eb[i], x, g.order()))));
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < eb.size(); ++i) {
    for (std::size_t j = 0; j < eb.size(); ++j) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t c = 0; c < ea.size(); ++c) s += rows[i][c] * std::conj(rows[j][c]);
      if (i == j) s -= static_cast<double>(ea.size());
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

/// Exact route (zero-set membership) and floating Gram route; throws if the
/// two routes disagree.
inline bool hadamard_check(const MultiSet& a, const MultiSet& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "#A != #B");
  bool exact = verify_spectral_pair(a, b);
  double tol = 1e-9 * static_cast<double>(std::max<std::uint64_t>(a.size(), 1));
  bool numeric = hadamard_gram_deviation(a, b) < tol;
  if (exact != numeric) {
    throw Error(ErrorKind::Internal, "exact and floating Hadamard checks disagree");
  }
  return exact;
}

namespace detail {

// Lex-least clique of a given size containing 0 in the circulant graph
// x ~ y <=> x - y in Z_A. Clique members are added in ascending order.
class SpectrumSearch {
 public:
  SpectrumSearch(const AnalyzedSet& a, Budget budget)
      : n_(a.group().order()), zeros_(a.zeros()), target_(a.size()), counter_(budget) {}

  SearchStatus run(std::vector<Element>& clique) {
    clique.assign(1, 0);
    if (target_ == 1) return SearchStatus::Found;
    std::vector<Element> candidates;
    for (Element v = 1; v < n_; ++v) {
      if (zeros_.contains(v)) candidates.push_back(v);
    }
    return expand(clique, candidates);
  }

  std::uint64_t nodes() const noexcept { return counter_.used(); }

 private:
  bool adjacent(Element u, Element v) const noexcept {
    return zeros_.contains((u + n_ - v) % n_);
  }

  // Greedy colouring of the candidate list; the number of colours bounds the
  // clique size inside it.
  std::size_t colour_bound(const std::vector<Element>& cand) const {
    std::vector<std::vector<Element>> classes;
    for (Element v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = std::any_of(cls.begin(), cls.end(), [&](Element u) { return adjacent(u, v); });
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  }

  SearchStatus expand(std::vector<Element>& clique, const std::vector<Element>& cand) {
    if (!counter_.tick()) return SearchStatus::Exhausted;
    if (clique.size() == target_) return SearchStatus::Found;
    std::size_t need = target_ - clique.size();
    if (cand.size() < need) return SearchStatus::Infeasible;
    if (colour_bound(cand) < need) return SearchStatus::Infeasible;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand.size() - i < need) break;
      Element v = cand[i];
      std::vector<Element> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (adjacent(cand[j], v)) next.push_back(cand[j]);
      }
      clique.push_back(v);
      SearchStatus s = expand(clique, next);
      if (s != SearchStatus::Infeasible) return s;
      clique.pop_back();
    }
    return SearchStatus::Infeasible;
  }

  std::uint64_t n_;
  const ZeroProfile& zeros_;
  std::uint64_t target_;
  NodeCounter counter_;
};

}  // namespace detail

/// Lex-least B with 0 in B, #B = #A and B - B contained in Z_A plus {0}.
inline SearchResult<MultiSet> find_spectrum(const AnalyzedSet& a, Budget budget = {}) {
  if (!a.set().is_set()) throw Error(ErrorKind::InvalidArgument, "spectrum search needs a set");
  detail::SpectrumSearch search(a, budget);
  std::vector<Element> clique;
  SearchResult<MultiSet> result;
  result.status = search.run(clique);
  result.nodes = search.nodes();
  if (result.found()) result.witness = MultiSet::of_elements(a.group(), clique);
  return result;
}

inline SearchResult<MultiSet> find_spectrum(const MultiSet& a, Budget budget = {}) {
  return find_spectrum(AnalyzedSet(a), budget);
}

/// Given a spectral pair (A, B), reports whether (B, A) is one as well.
inline bool spectral_duality(const MultiSet& a, const MultiSet& b) {
  if (!verify_spectral_pair(a, b)) {
    throw Error(ErrorKind::PreconditionViolated, "(A, B) is not a spectral pair");
  }
  return verify_spectral_pair(b, a);
}

/// A = {(x, y, f(x, y)) : (x, y) in S} with respect to two chosen prime
/// coordinates of Z_pqr; S is listed ascending with f aligned to it.
struct PrimeGraph {
  std::array<std::size_t, 2> base{};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> domain;
  std::vector<std::uint64_t> values;

  /// S = Z_p x Z_q.
  bool is_full(const CyclicGroup& g) const {
    return domain.size() == g.primes()[base[0]] * g.primes()[base[1]];
  }
};

inline std::optional<PrimeGraph> graph_over_primes(const MultiSet& a,
                                                   std::array<std::size_t, 2> base) {
  const auto& g = a.group();
  if (g.rank() != 3) throw Error(ErrorKind::InvalidArgument, "graph_over_primes needs Z_pqr");
  if (base[0] >= 3 || base[1] >= 3 || base[0] == base[1]) {
    throw Error(ErrorKind::InvalidArgument, "base must name two distinct prime positions");
  }
  std::size_t other = 3 - base[0] - base[1];
  std::uint64_t p = g.primes()[base[0]], q = g.primes()[base[1]], r = g.primes()[other];
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>> pts;
  for (Element x : a.support()) pts.push_back({{x % p, x % q}, x % r});
  std::sort(pts.begin(), pts.end());
  PrimeGraph out;
  out.base = base;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i].first == pts[i - 1].first) return std::nullopt;
    out.domain.push_back(pts[i].first);
    out.values.push_back(pts[i].second);
  }
  if (a.size() != out.domain.size()) return std::nullopt;  // repeated elements
  return out;
}

}  // namespace spectile
