#pragma once

// Theorem harness for Z_pqr: per-set classification, affine-orbit
// enumeration, exhaustive and sampled equivalence checks, and the property
// suites run over harvested spectral pairs.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "spectile/cycle_decomp.hpp"
#include "spectile/cyclic_core.hpp"
#include "spectile/mask_poly.hpp"
#include "spectile/search.hpp"
#include "spectile/spectral.hpp"
#include "spectile/tiling.hpp"

namespace spectile {

struct ClassificationReport {
  explicit ClassificationReport(MultiSet set) : set_repr(std::move(set)) {}

  MultiSet set_repr;
  bool t1 = false;
  bool t2 = false;
  SearchStatus tile_status = SearchStatus::Infeasible;
  SearchStatus spectrum_status = SearchStatus::Infeasible;
  std::optional<MultiSet> tile_witness;
  std::optional<MultiSet> spectrum_witness;
  std::vector<std::uint64_t> divisor_zeros;
  std::vector<std::uint64_t> s_a;
  /// The tile witness came from a detected graph form.
  bool graph_form = false;
  std::uint64_t nodes_used = 0;

  bool inconclusive() const noexcept {
    return tile_status == SearchStatus::Exhausted || spectrum_status == SearchStatus::Exhausted;
  }

  /// (T1) and (T2), tile, and spectral all agree.
  bool consistent() const noexcept {
    bool c = t1 && t2;
    return !inconclusive() && tile_witness.has_value() == c && spectrum_witness.has_value() == c;
  }

  bool positive() const noexcept { return consistent() && t1 && t2; }
};

inline ClassificationReport classify_set(const MultiSet& a, Budget budget = {}) {
  detail::require_nonempty_set(a);
  AnalyzedSet as(a);
  ClassificationReport rep(a);
  rep.t1 = check_T1(as);
  rep.t2 = check_T2(as);
  rep.divisor_zeros = as.zeros().divisor_zeros;
  rep.s_a = as.zeros().s_a;

  if (auto gf = detect_graph_form(a)) {
    rep.graph_form = true;
    rep.tile_status = SearchStatus::Found;
    rep.tile_witness = complement_from_graph(*gf, a.group());
  } else {
    auto r = find_tiling_complement(a, budget);
    rep.tile_status = r.status;
    rep.tile_witness = std::move(r.witness);
    rep.nodes_used += r.nodes;
  }

  if (rep.t1 && rep.t2) {
    rep.spectrum_status = SearchStatus::Found;
    rep.spectrum_witness = spectrum_from_T1T2(as);
  } else {
    auto r = find_spectrum(as, budget);
    rep.spectrum_status = r.status;
    rep.spectrum_witness = std::move(r.witness);
    rep.nodes_used += r.nodes;
  }
  return rep;
}

/// Bitmask of a set (bit x for element x) minimized over the affine group.
/// Words are little-endian; comparison treats the mask as one integer.
struct OrbitKey {
  std::vector<std::uint64_t> words;

  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
  friend std::strong_ordering operator<=>(const OrbitKey& a, const OrbitKey& b) {
    if (auto c = a.words.size() <=> b.words.size(); c != 0) return c;
    for (std::size_t i = a.words.size(); i-- > 0;) {
      if (auto c = a.words[i] <=> b.words[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
};

inline OrbitKey canonical_orbit_key(const MultiSet& a) {
  detail::require_nonempty_set(a);
  const auto& g = a.group();
  const std::uint64_t n = g.order();
  auto support = a.support();
  std::optional<OrbitKey> best;
  std::vector<Element> image(support.size());
  for (Element u : g.units()) {
    for (std::size_t i = 0; i < support.size(); ++i) image[i] = arith::mul_mod(u, support[i], n);
    // A minimal key contains 0, so only translates moving an element to 0 compete.
    for (Element shift : image) {
      OrbitKey key{std::vector<std::uint64_t>((n + 63) / 64, 0)};
      for (Element y : image) {
        Element z = (y + n - shift) % n;
        key.words[z >> 6] |= std::uint64_t{1} << (z & 63);
      }
      if (!best || key < *best) best = std::move(key);
    }
  }
  return *best;
}

namespace detail {

// Affine action on single-word masks (N <= 64) through per-unit byte tables.
class AffineMasks {
 public:
  explicit AffineMasks(const CyclicGroup& g)
      : n_(g.order()),
        full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
        bytes_((n_ + 7) / 8) {
    if (n_ > 64) throw Error(ErrorKind::InvalidArgument, "word masks need N <= 64");
    for (Element u : g.units()) {
      if (u == 1) continue;
      std::vector<std::uint64_t> table(bytes_ * 256, 0);
      for (std::size_t b = 0; b < bytes_; ++b) {
        for (std::uint64_t v = 0; v < 256; ++v) {
          std::uint64_t img = 0;
          for (std::size_t bit = 0; bit < 8; ++bit) {
            Element x = b * 8 + bit;
            if ((v >> bit & 1) && x < n_) img |= std::uint64_t{1} << arith::mul_mod(u, x, n_);
          }
          table[b * 256 + v] = img;
        }
      }
      tables_.push_back(std::move(table));
    }
  }

  std::uint64_t scale(std::size_t unit_index, std::uint64_t m) const noexcept {
    const auto& t = tables_[unit_index];
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < bytes_; ++b) out |= t[b * 256 + (m >> (8 * b) & 0xff)];
    return out;
  }

  // Translate by -x.
  std::uint64_t shift_down(std::uint64_t m, std::uint64_t x) const noexcept {
    if (x == 0) return m;
    return ((m >> x) | (m << (n_ - x))) & full_;
  }

  bool beaten_by_translate(std::uint64_t img, std::uint64_t m) const noexcept {
    for (std::uint64_t rest = img; rest != 0; rest &= rest - 1) {
      if (shift_down(img, static_cast<std::uint64_t>(std::countr_zero(rest))) < m) return true;
    }
    return false;
  }

  bool is_canonical(std::uint64_t m) const noexcept {
    if (beaten_by_translate(m, m)) return false;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
      if (beaten_by_translate(scale(i, m), m)) return false;
    }
    return true;
  }

  MultiSet to_set(const CyclicGroup& g, std::uint64_t m) const {
    MultiSet out(g);
    for (; m != 0; m &= m - 1) out.add(static_cast<Element>(std::countr_zero(m)));
    return out;
  }

 private:
  std::uint64_t n_;
  std::uint64_t full_;
  std::size_t bytes_;
  std::vector<std::vector<std::uint64_t>> tables_;
};

}  // namespace detail

struct SizeSummary {
  std::uint64_t size = 0;
  std::uint64_t sets = 0;
  std::uint64_t t1t2 = 0;
  std::uint64_t tiles = 0;
  std::uint64_t spectral = 0;
  /// All three predicates hold and agree.
  std::uint64_t positive = 0;
  std::uint64_t violations = 0;
  std::uint64_t inconclusive = 0;

  SizeSummary& operator+=(const SizeSummary& o) {
    sets += o.sets;
    t1t2 += o.t1t2;
    tiles += o.tiles;
    spectral += o.spectral;
    positive += o.positive;
    violations += o.violations;
    inconclusive += o.inconclusive;
    return *this;
  }
};

/// Checks on the constructed witnesses of every (T1)+(T2) set and every tile.
struct WitnessStats {
  std::uint64_t t1t2_sets = 0;
  std::uint64_t spectra_constructed = 0;
  std::uint64_t tiles = 0;
  std::uint64_t tiles_in_graph_form = 0;
  std::uint64_t graph_complements_verified = 0;

  bool ok() const noexcept {
    return spectra_constructed == t1t2_sets && tiles_in_graph_form == tiles &&
           graph_complements_verified == tiles_in_graph_form;
  }

  WitnessStats& operator+=(const WitnessStats& o) {
    t1t2_sets += o.t1t2_sets;
    spectra_constructed += o.spectra_constructed;
    tiles += o.tiles;
    tiles_in_graph_form += o.tiles_in_graph_form;
    graph_complements_verified += o.graph_complements_verified;
    return *this;
  }
};

struct DualityStats {
  std::uint64_t pairs = 0;
  std::uint64_t both_directions = 0;

  bool ok() const noexcept { return both_directions == pairs; }
};

struct TheoremReport {
  std::uint64_t order = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t samples_per_size = 0;
  std::vector<SizeSummary> sizes;
  std::vector<ClassificationReport> violations;
  std::vector<MultiSet> inconclusive;
  std::vector<std::string> errors;
  /// Witness pairs of every positive classification, in enumeration order.
  std::vector<SpectralPair> pairs;
  WitnessStats witnesses;
  DualityStats duality;
  std::uint64_t nodes_used = 0;
  double elapsed_ms = 0.0;

  std::uint64_t total_sets() const {
    std::uint64_t t = 0;
    for (const auto& s : sizes) t += s.sets;
    return t;
  }

  bool ok() const {
    return violations.empty() && inconclusive.empty() && errors.empty() && witnesses.ok() &&
           duality.ok();
  }
};

namespace detail {

struct SetOutcome {
  std::uint64_t order_key = 0;
  std::optional<ClassificationReport> violation;
  std::optional<MultiSet> inconclusive;
  std::optional<std::string> error;
  std::optional<SpectralPair> pair;
};

// Classifies one set and updates the per-size and witness tallies. Outcomes
// that need to be listed in the report are returned for the ordered merge.
inline std::optional<SetOutcome> process_set(const MultiSet& a, Budget budget,
                                             SizeSummary& summary, WitnessStats& wit,
                                             DualityStats& dual, std::uint64_t& nodes) {
  ++summary.sets;
  SetOutcome out;
  bool listed = false;
  try {
    ClassificationReport rep = classify_set(a, budget);
    nodes += rep.nodes_used;
    bool t1t2 = rep.t1 && rep.t2;
    if (t1t2) ++summary.t1t2;
    if (rep.tile_witness) ++summary.tiles;
    if (rep.spectrum_witness) ++summary.spectral;
    if (t1t2) {
      ++wit.t1t2_sets;
      if (rep.spectrum_witness && verify_spectral_pair(a, *rep.spectrum_witness)) {
        ++wit.spectra_constructed;
      }
    }
    if (rep.tile_witness) {
      ++wit.tiles;
      if (rep.graph_form) {
        ++wit.tiles_in_graph_form;
        if (verify_tiling_pair(a, *rep.tile_witness)) ++wit.graph_complements_verified;
      }
    }
    if (rep.inconclusive()) {
      ++summary.inconclusive;
      out.inconclusive = a;
      listed = true;
    } else if (!rep.consistent()) {
      ++summary.violations;
      out.violation = rep;
      listed = true;
    } else if (rep.positive()) {
      ++summary.positive;
    }
    if (rep.spectrum_witness) {
      ++dual.pairs;
      if (spectral_duality(a, *rep.spectrum_witness)) ++dual.both_directions;
      out.pair = SpectralPair{a, *rep.spectrum_witness};
      listed = true;
    }
  } catch (const Error& e) {
    out.error = to_string(a) + ": " + e.what();
    listed = true;
  }
  if (!listed) return std::nullopt;
  return out;
}

struct WorkerState {
  std::vector<SizeSummary> sizes;
  std::vector<SetOutcome> outcomes;
  WitnessStats witnesses;
  DualityStats duality;
  std::uint64_t nodes = 0;
};

inline void merge_workers(TheoremReport& report, std::vector<WorkerState>& workers,
                          std::span<const std::uint64_t> sizes) {
  report.sizes.clear();
  for (std::uint64_t k : sizes) report.sizes.push_back(SizeSummary{k});
  std::vector<SetOutcome> outcomes;
  for (auto& w : workers) {
    for (std::size_t i = 0; i < sizes.size(); ++i) report.sizes[i] += w.sizes[i];
    report.witnesses += w.witnesses;
    report.duality.pairs += w.duality.pairs;
    report.duality.both_directions += w.duality.both_directions;
    report.nodes_used += w.nodes;
    std::move(w.outcomes.begin(), w.outcomes.end(), std::back_inserter(outcomes));
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const SetOutcome& x, const SetOutcome& y) { return x.order_key < y.order_key; });
  for (auto& o : outcomes) {
    if (o.violation) report.violations.push_back(std::move(*o.violation));
    if (o.inconclusive) report.inconclusive.push_back(std::move(*o.inconclusive));
    if (o.error) report.errors.push_back(std::move(*o.error));
    if (o.pair) report.pairs.push_back(std::move(*o.pair));
  }
}

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Body>
void run_workers(unsigned jobs, Body body) {
  if (jobs == 1) {
    body(0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back([&body, w] { body(w); });
}

inline void require_three_primes(const CyclicGroup& g) {
  if (g.rank() != 3) {
    throw Error(ErrorKind::PreconditionViolated, "expected N = pqr with three distinct primes");
  }
}

inline double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

/// One representative (the minimal key) per affine orbit of each requested
/// size. Workers take every jobs-th representative; the merge is ordered by
/// size and key, so the report does not depend on scheduling.
inline TheoremReport verify_theorem_exhaustive(const CyclicGroup& g,
                                               std::vector<std::uint64_t> sizes = {},
                                               Budget budget = {}, unsigned jobs = 0) {
  detail::require_three_primes(g);
  const std::uint64_t n = g.order();
  if (n > 64) throw Error(ErrorKind::InvalidArgument, "exhaustive enumeration needs N <= 64");
  if (sizes.empty()) {
    for (std::uint64_t k = 1; k <= n; ++k) sizes.push_back(k);
  }
  for (std::uint64_t k : sizes) {
    if (k == 0 || k > n) throw Error(ErrorKind::InvalidArgument, "set size out of range");
  }
  auto start = std::chrono::steady_clock::now();
  jobs = detail::resolve_jobs(jobs);
  detail::AffineMasks masks(g);
  std::vector<detail::WorkerState> workers(jobs);

  detail::run_workers(jobs, [&](unsigned id) {
    auto& st = workers[id];
    st.sizes.assign(sizes.size(), SizeSummary{});
    std::uint64_t counter = 0;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const std::uint64_t k = sizes[si];
      // Canonical masks contain 0; the other k-1 bits range over 1..N-1
      // in Gosper order.
      const std::uint64_t limit = std::uint64_t{1} << (n - 1);
      std::uint64_t v = (std::uint64_t{1} << (k - 1)) - 1;
      while (v < limit) {
        std::uint64_t m = (v << 1) | 1;
        if (counter++ % jobs == id && masks.is_canonical(m)) {
          auto out = detail::process_set(masks.to_set(g, m), budget, st.sizes[si], st.witnesses,
                                         st.duality, st.nodes);
          if (out) {
            out->order_key = si << 58 | (m & ((std::uint64_t{1} << 58) - 1));
            st.outcomes.push_back(std::move(*out));
          }
        }
        if (v == 0) break;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
      }
    }
  });

  TheoremReport report;
  report.order = n;
  report.mode = "exhaustive";
  detail::merge_workers(report, workers, sizes);
  report.elapsed_ms = detail::elapsed_ms_since(start);
  return report;
}

/// Divisors of N together with the non-divisors up to 12, ascending.
inline std::vector<std::uint64_t> default_sample_sizes(const CyclicGroup& g) {
  std::vector<std::uint64_t> out(g.divisors().begin(), g.divisors().end());
  for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(12, g.order()); ++k) {
    if (g.order() % k != 0) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Generator for sample `index` of size `size`; independent of scheduling.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t size, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(splitmix64(seed) ^ size) ^ index));
}

inline MultiSet random_subset(const CyclicGroup& g, std::uint64_t k, std::mt19937_64& rng) {
  std::vector<Element> pool(g.order());
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, g.order() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return MultiSet::of_elements(g, pool);
}

}  // namespace detail

inline TheoremReport verify_theorem_sampled(const CyclicGroup& g,
                                            std::vector<std::uint64_t> sizes,
                                            std::uint64_t samples, std::uint64_t seed,
                                            Budget budget = {}, unsigned jobs = 0) {
  detail::require_three_primes(g);
  if (sizes.empty()) sizes = default_sample_sizes(g);
  for (std::uint64_t k : sizes) {
    if (k == 0 || k > g.order()) throw Error(ErrorKind::InvalidArgument, "set size out of range");
  }
  auto start = std::chrono::steady_clock::now();
  jobs = detail::resolve_jobs(jobs);
  std::vector<detail::WorkerState> workers(jobs);

  detail::run_workers(jobs, [&](unsigned id) {
    auto& st = workers[id];
    st.sizes.assign(sizes.size(), SizeSummary{});
    std::uint64_t counter = 0;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      for (std::uint64_t i = 0; i < samples; ++i) {
        if (counter++ % jobs != id) continue;
        auto rng = detail::sample_rng(seed, sizes[si], i);
        auto a = detail::random_subset(g, sizes[si], rng);
        auto out = detail::process_set(a, budget, st.sizes[si], st.witnesses, st.duality,
                                       st.nodes);
        if (out) {
          out->order_key = counter;
          st.outcomes.push_back(std::move(*out));
        }
      }
    }
  });

  TheoremReport report;
  report.order = g.order();
  report.mode = "sampled";
  report.seed = seed;
  report.samples_per_size = samples;
  detail::merge_workers(report, workers, sizes);
  report.elapsed_ms = detail::elapsed_ms_since(start);
  return report;
}

struct AssertionCounts {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;
};

enum class CaseAssertion {
  GraphOverPair,      // pq not in Z_B => A is a graph over Z_p x Z_q, #A <= pq
  InjectiveFibre,     // (A-A) misses pq Z*, pA has an r-cycle => p > r, (A-A) meets q Z*
  ZeroTransfer,       // p in Z_A, pr not in Z_A, pq not in Z_B => p > r, q in Z_B
  NoPairZeros,        // Z_A misses {pq,pr,qr} => Z_B misses it and #A = 1
  TwoPairZeros,       // pr, qr in Z_A, pq not => A and B are full graphs over Z_p x Z_q
  OnePairZero,        // qr in Z_A, pq, pr not => #A = p, qr in Z_B, pq, pr not in Z_B
};

inline constexpr std::array<CaseAssertion, 6> kCaseAssertions = {
    CaseAssertion::GraphOverPair, CaseAssertion::InjectiveFibre, CaseAssertion::ZeroTransfer,
    CaseAssertion::NoPairZeros,   CaseAssertion::TwoPairZeros,   CaseAssertion::OnePairZero};

inline const char* to_string(CaseAssertion c) {
  switch (c) {
    case CaseAssertion::GraphOverPair: return "graph_over_pair";
    case CaseAssertion::InjectiveFibre: return "injective_fibre";
    case CaseAssertion::ZeroTransfer: return "zero_transfer";
    case CaseAssertion::NoPairZeros: return "no_pair_zeros";
    case CaseAssertion::TwoPairZeros: return "two_pair_zeros";
    case CaseAssertion::OnePairZero: return "one_pair_zero";
  }
  return "unknown";
}

struct CaseSuiteReport {
  std::uint64_t pairs = 0;
  std::array<AssertionCounts, 6> counts{};
  /// Pairs by #(Z_A n {pq, pr, qr}) = 0, 1, 2, 3.
  std::array<std::uint64_t, 4> census{};
  std::vector<std::string> failures;

  const AssertionCounts& at(CaseAssertion c) const { return counts[static_cast<std::size_t>(c)]; }
  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline bool differences_meet(const MultiSet& a, std::uint64_t d) {
  const std::uint64_t n = a.group().order();
  auto e = a.support();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i != j && std::gcd((e[i] + n - e[j]) % n, n) == d) return true;
    }
  }
  return false;
}

class CaseSuite {
 public:
  explicit CaseSuite(CaseSuiteReport& report) : report_(report) {}

  void run(const SpectralPair& pair) {
    const auto& g = pair.a.group();
    AnalyzedSet a(pair.a), b(pair.b);
    ++report_.pairs;
    {
      const auto p = g.primes();
      std::size_t hits = 0;
      for (std::uint64_t d : {p[0] * p[1], p[0] * p[2], p[1] * p[2]}) hits += a.zeros().contains(d);
      ++report_.census[hits];
    }
    std::array<std::size_t, 3> roles{0, 1, 2};
    do {
      check_roles(a, b, roles);
    } while (std::next_permutation(roles.begin(), roles.end()));
  }

 private:
  void record(CaseAssertion c, bool hypothesis, bool conclusion, const AnalyzedSet& a,
              const AnalyzedSet& b, std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    auto& cnt = report_.counts[static_cast<std::size_t>(c)];
    if (!hypothesis) {
      ++cnt.vacuous;
    } else if (conclusion) {
      ++cnt.pass;
    } else {
      ++cnt.fail;
      report_.failures.push_back(std::string(to_string(c)) + " (p,q,r)=(" + std::to_string(p) +
                                 "," + std::to_string(q) + "," + std::to_string(r) +
                                 ") A=" + to_string(a.set()) + " B=" + to_string(b.set()));
    }
  }

  void check_roles(const AnalyzedSet& a, const AnalyzedSet& b, std::array<std::size_t, 3> pos) {
    const auto& g = a.group();
    const std::uint64_t p = g.primes()[pos[0]], q = g.primes()[pos[1]], r = g.primes()[pos[2]];
    const auto& za = a.zeros();
    const auto& zb = b.zeros();

    {
      bool hyp = !zb.contains(p * q);
      bool concl = false;
      if (hyp) {
        auto graph = graph_over_primes(a.set(), {pos[0], pos[1]});
        concl = graph && a.size() <= p * q && ((a.size() == p * q) == graph->is_full(g));
      }
      record(CaseAssertion::GraphOverPair, hyp, concl, a, b, p, q, r);
    }

    const std::array<std::uint64_t, 3> fibre_order{r, q, p};
    for (const AnalyzedSet* x : {&a, &b}) {
      bool hyp = !differences_meet(x->set(), p * q) &&
                 has_prime_cycle_in_scaled(x->set(), fibre_order, 3).has_value();
      bool concl = hyp && p > r && differences_meet(x->set(), q);
      record(CaseAssertion::InjectiveFibre, hyp, concl, a, b, p, q, r);
    }

    for (auto [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
      bool hyp = x->zeros().contains(p) && !x->zeros().contains(p * r) &&
                 !y->zeros().contains(p * q);
      bool concl = hyp && p > r && y->zeros().contains(q);
      record(CaseAssertion::ZeroTransfer, hyp, concl, a, b, p, q, r);
    }

    const bool a_pq = za.contains(p * q), a_pr = za.contains(p * r), a_qr = za.contains(q * r);
    const bool b_pq = zb.contains(p * q), b_pr = zb.contains(p * r), b_qr = zb.contains(q * r);
    {
      bool hyp = !a_pq && !a_pr && !a_qr;
      bool concl = hyp && !b_pq && !b_pr && !b_qr && a.size() == 1;
      record(CaseAssertion::NoPairZeros, hyp, concl, a, b, p, q, r);
    }
    {
      bool hyp = !a_pq && a_pr && a_qr;
      bool concl = false;
      if (hyp) {
        auto ga = graph_over_primes(a.set(), {pos[0], pos[1]});
        auto gb = graph_over_primes(b.set(), {pos[0], pos[1]});
        concl = ga && ga->is_full(g) && gb && gb->is_full(g);
      }
      record(CaseAssertion::TwoPairZeros, hyp, concl, a, b, p, q, r);
    }
    {
      bool hyp = a_qr && !a_pq && !a_pr;
      bool concl = hyp && a.size() == p && b_qr && !b_pq && !b_pr;
      record(CaseAssertion::OnePairZero, hyp, concl, a, b, p, q, r);
    }
  }

  CaseSuiteReport& report_;
};

}  // namespace detail

/// Every pair must be a spectral pair of sets in some Z_pqr. Each pair is
/// checked under all six assignments of the roles (p, q, r).
inline CaseSuiteReport case_analysis_suite(std::span<const SpectralPair> pairs) {
  CaseSuiteReport report;
  detail::CaseSuite suite(report);
  for (const auto& pair : pairs) {
    detail::require_three_primes(pair.a.group());
    if (!verify_spectral_pair(pair.a, pair.b)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "not a spectral pair: " + to_string(pair.a) + ", " + to_string(pair.b));
    }
    suite.run(pair);
  }
  return report;
}

}  // namespace spectile
