#pragma once

// Command-line front end. run_cli returns the process exit status:
// 0 success, 1 violation found, 2 input error, 3 budget exhausted.

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectile/cycle_decomp.hpp"
#include "spectile/cyclic_core.hpp"
#include "spectile/report.hpp"
#include "spectile/spectral.hpp"
#include "spectile/tiling.hpp"
#include "spectile/verifier.hpp"

namespace spectile {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInput = 2, kExitBudget = 3 };

struct RunConfig {
  std::string command;
  std::uint64_t n = 0;
  std::string set_literal;
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string json_path;
  unsigned jobs = 0;
  bool exhaustive = false;
  std::uint64_t sampled = 0;
  std::string sizes;
  std::string primes;
  std::vector<std::uint64_t> counterexample_primes;
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline int status_exit(SearchStatus s) {
  return s == SearchStatus::Exhausted ? kExitBudget : kExitOk;
}

}  // namespace detail

inline CommandResult cmd_analyze(const RunConfig& cfg) {
  detail::Stopwatch clock;
  auto g = make_group(cfg.n);
  auto a = parse_set_literal(g, cfg.set_literal);
  auto rep = classify_set(a, Budget{cfg.budget});
  auto zeros = zero_profile(a);
  CommandResult out{classification_json("analyze", a, rep, zeros, clock.ms())};
  if (rep.inconclusive()) {
    out.exit_code = kExitBudget;
  } else if (!rep.consistent()) {
    out.exit_code = kExitViolation;
  }
  return out;
}

inline CommandResult cmd_spectrum(const RunConfig& cfg) {
  detail::Stopwatch clock;
  auto g = make_group(cfg.n);
  AnalyzedSet a(parse_set_literal(g, cfg.set_literal));
  auto r = find_spectrum(a, Budget{cfg.budget});
  Json j = {{"schema", kReportSchema},
            {"command", "spectrum"},
            {"group", group_json(g)},
            {"input", elements_json(a.set())},
            {"verdicts", {{"spectral", decided(r.status)}}},
            {"witnesses", {{"spectrum", optional_set_json(r.witness)}}},
            {"zero_profile", zero_profile_json(a.zeros())},
            {"timing_ms", clock.ms()},
            {"budget", {{"nodes_used", r.nodes}, {"exhausted", r.exhausted()}}}};
  return {j, detail::status_exit(r.status)};
}

inline CommandResult cmd_tile(const RunConfig& cfg) {
  detail::Stopwatch clock;
  auto g = make_group(cfg.n);
  auto a = parse_set_literal(g, cfg.set_literal);
  auto r = find_tiling_complement(a, Budget{cfg.budget});
  auto gf = detect_graph_form(a);
  Json graph = nullptr;
  if (gf) {
    graph = {{"base_primes", std::vector<std::uint64_t>(gf->permutation.begin(),
                                                        gf->permutation.begin() + gf->ell)},
             {"complement", elements_json(complement_from_graph(*gf, g))}};
  }
  Json j = {{"schema", kReportSchema},
            {"command", "tile"},
            {"group", group_json(g)},
            {"input", elements_json(a)},
            {"verdicts", {{"tile", decided(r.status)}}},
            {"witnesses", {{"tiling_complement", optional_set_json(r.witness)}}},
            {"graph_form", graph},
            {"zero_profile", zero_profile_json(zero_profile(a))},
            {"timing_ms", clock.ms()},
            {"budget", {{"nodes_used", r.nodes}, {"exhausted", r.exhausted()}}}};
  return {j, detail::status_exit(r.status)};
}

namespace detail {

inline Json decomposition_json(const SearchResult<CycleDecomposition>& r) {
  Json cycles = Json::array();
  if (r.witness) {
    for (const auto& c : r.witness->cycles) cycles.push_back({{"d", c.d}, {"base", c.base}});
  }
  return {{"status", to_string(r.status)}, {"cycles", cycles}};
}

inline Json lam_leung_json(std::uint64_t size, std::span<const std::uint64_t> primes) {
  auto c = lam_leung_feasible(size, primes);
  return {{"size", size}, {"coefficients", c ? Json(*c) : Json(nullptr)}};
}

}  // namespace detail

inline CommandResult cmd_decompose(const RunConfig& cfg) {
  detail::Stopwatch clock;
  auto g = make_group(cfg.n);
  auto a = parse_set_literal(g, cfg.set_literal);
  std::vector<std::uint64_t> primes(g.primes().begin(), g.primes().end());
  if (!cfg.primes.empty()) primes = parse_uint_list(cfg.primes);
  auto r = decompose_prime_cycles(a, primes, Budget{cfg.budget});
  Json j = {{"schema", kReportSchema},
            {"command", "decompose"},
            {"group", group_json(g)},
            {"input", elements_json(a)},
            {"verdicts", {{"vanishing", root_is_zero(a, 1)}}},
            {"decomposition", detail::decomposition_json(r)},
            {"lam_leung", detail::lam_leung_json(a.size(), g.primes())},
            {"zero_profile", zero_profile_json(zero_profile(a))},
            {"timing_ms", clock.ms()},
            {"budget", {{"nodes_used", r.nodes}, {"exhausted", r.exhausted()}}}};
  return {j, detail::status_exit(r.status)};
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
  auto g = make_group(cfg.n);
  if (cfg.exhaustive == (cfg.sampled != 0)) {
    throw Error(ErrorKind::InvalidArgument, "choose exactly one of --exhaustive or --sampled K");
  }
  std::vector<std::uint64_t> sizes;
  if (!cfg.sizes.empty()) sizes = parse_uint_list(cfg.sizes);
  TheoremReport r = cfg.exhaustive
                        ? verify_theorem_exhaustive(g, sizes, Budget{cfg.budget}, cfg.jobs)
                        : verify_theorem_sampled(g, sizes, cfg.sampled, cfg.seed,
                                                 Budget{cfg.budget}, cfg.jobs);
  auto suite = case_analysis_suite(r.pairs);
  CommandResult out{theorem_json(r, g, suite)};
  if (!r.violations.empty() || !r.errors.empty() || !r.witnesses.ok() || !r.duality.ok() ||
      !suite.ok()) {
    out.exit_code = kExitViolation;
  } else if (!r.inconclusive.empty()) {
    out.exit_code = kExitBudget;
  }
  return out;
}

inline CommandResult cmd_counterexample(const RunConfig& cfg) {
  detail::Stopwatch clock;
  const auto& pr = cfg.counterexample_primes;
  if (pr.size() != 3) throw Error(ErrorKind::InvalidPrimes, "expected three primes");
  auto m = counterexample_multiset(pr[0], pr[1], pr[2]);
  const auto& g = m.group();
  auto zeros = zero_profile(m);
  bool vanishing = root_is_zero(m, 1);
  auto r = decompose_prime_cycles(m, g.primes(), Budget{cfg.budget});
  Json j = {{"schema", kReportSchema},
            {"command", "counterexample"},
            {"group", group_json(g)},
            {"input", pr},
            {"multiset", elements_json(m)},
            {"vanishing", vanishing},
            {"decomposition", detail::decomposition_json(r)},
            {"lam_leung", detail::lam_leung_json(m.size(), g.primes())},
            {"zero_profile", zero_profile_json(zeros)},
            {"timing_ms", clock.ms()},
            {"budget", {{"nodes_used", r.nodes}, {"exhausted", r.exhausted()}}}};
  int code = kExitOk;
  if (r.exhausted()) {
    code = kExitBudget;
  } else if (!vanishing || r.found()) {
    code = kExitViolation;
  }
  return {j, code};
}

inline CommandResult dispatch(const RunConfig& cfg) {
  if (cfg.command == "analyze") return cmd_analyze(cfg);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg);
  if (cfg.command == "tile") return cmd_tile(cfg);
  if (cfg.command == "decompose") return cmd_decompose(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "counterexample") return cmd_counterexample(cfg);
  throw Error(ErrorKind::InvalidArgument, "unknown command " + cfg.command);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"spectile: spectral sets and tiles in cyclic groups of square-free order"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_set) {
    sub->add_option("-N", cfg.n, "group order (square-free)")->required();
    if (needs_set) {
      sub->add_option("-A", cfg.set_literal, "set literal, e.g. 0,15 or 0^2,15")->required();
    }
    sub->add_option("--budget", cfg.budget, "search node budget per set");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--json", cfg.json_path, "also write the JSON report to this path");
  };

  auto* analyze = app.add_subcommand("analyze", "classify a set");
  common(analyze, true);
  auto* spectrum = app.add_subcommand("spectrum", "search for a spectrum");
  common(spectrum, true);
  auto* tile = app.add_subcommand("tile", "search for a tiling complement");
  common(tile, true);
  auto* decompose = app.add_subcommand("decompose", "split a multiset into prime cycles");
  common(decompose, true);
  decompose->add_option("--primes", cfg.primes, "comma-separated primes to use");
  auto* verify = app.add_subcommand("verify", "check the equivalence over many sets");
  common(verify, false);
  verify->add_flag("--exhaustive", cfg.exhaustive, "one set per affine orbit");
  verify->add_option("--sampled", cfg.sampled, "random sets per size");
  verify->add_option("--seed", cfg.seed, "seed for --sampled");
  verify->add_option("--sizes", cfg.sizes, "comma-separated set sizes");
  verify->add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  auto* counter = app.add_subcommand("counterexample", "vanishing sum that is no union of cycles");
  counter->add_option("primes", cfg.counterexample_primes, "three distinct primes")->required();
  counter->add_option("--budget", cfg.budget, "search node budget");
  counter->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  counter->add_option("--json", cfg.json_path, "also write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  CommandResult result;
  try {
    result = dispatch(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? kExitViolation : kExitInput;
  }

  if (cfg.format == "json") {
    out << result.report.dump(2) << "\n";
  } else {
    out << render_text(result.report);
  }
  if (!cfg.json_path.empty()) {
    std::ofstream file(cfg.json_path);
    if (!file) {
      err << "error: cannot write " << cfg.json_path << "\n";
      return kExitInput;
    }
    file << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace spectile
