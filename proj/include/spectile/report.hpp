#pragma once

// Set literals, JSON reports (schema 1) and their text rendering.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spectile/cycle_decomp.hpp"
#include "spectile/cyclic_core.hpp"
#include "spectile/mask_poly.hpp"
#include "spectile/verifier.hpp"

namespace spectile {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

/// "0^2,15" -> {0, 0, 15}. Elements must lie in [0, N).
inline MultiSet parse_set_literal(const CyclicGroup& g, std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  if (detail::trim(text).empty()) throw Error(ErrorKind::ParseError, "empty set literal");
  MultiSet out(g);
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    std::uint64_t times = 1;
    if (auto caret = item.find('^'); caret != std::string_view::npos) {
      times = detail::parse_uint(item.substr(caret + 1), "multiplicity");
      item = item.substr(0, caret);
      if (times == 0 || times > MultiSet::kMaxMultiplicity) {
        throw Error(ErrorKind::ParseError, "multiplicity out of range");
      }
    }
    std::uint64_t x = detail::parse_uint(item, "element");
    if (x >= g.order()) {
      throw Error(ErrorKind::ParseError,
                  std::to_string(x) + " is outside [0, " + std::to_string(g.order()) + ")");
    }
    out.add(x, static_cast<MultiSet::Count>(times));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

inline std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(detail::parse_uint(text.substr(0, comma), "integer"));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

inline Json elements_json(const MultiSet& a) { return Json(a.elements()); }

inline Json optional_set_json(const std::optional<MultiSet>& a) {
  return a ? elements_json(*a) : Json(nullptr);
}

inline Json group_json(const CyclicGroup& g) {
  return {{"N", g.order()},
          {"primes", std::vector<std::uint64_t>(g.primes().begin(), g.primes().end())}};
}

inline Json zero_profile_json(const ZeroProfile& z) {
  return {{"divisor_zeros", z.divisor_zeros}, {"s_a", z.s_a}, {"full", z.full_zeros()}};
}

/// true/false when decided, null when the search ran out of budget.
inline Json decided(SearchStatus s) {
  if (s == SearchStatus::Exhausted) return nullptr;
  return s == SearchStatus::Found;
}

inline Json classification_json(const std::string& command, const MultiSet& input,
                                const ClassificationReport& rep, const ZeroProfile& zeros,
                                double timing_ms) {
  return {{"schema", kReportSchema},
          {"command", command},
          {"group", group_json(input.group())},
          {"input", elements_json(input)},
          {"verdicts",
           {{"t1", rep.t1},
            {"t2", rep.t2},
            {"t2_vacuous", zeros.s_a.size() < 2},
            {"tile", decided(rep.tile_status)},
            {"spectral", decided(rep.spectrum_status)},
            {"consistent", rep.consistent()}}},
          {"witnesses",
           {{"tiling_complement", optional_set_json(rep.tile_witness)},
            {"spectrum", optional_set_json(rep.spectrum_witness)}}},
          {"zero_profile", zero_profile_json(zeros)},
          {"timing_ms", timing_ms},
          {"budget", {{"nodes_used", rep.nodes_used}, {"exhausted", rep.inconclusive()}}}};
}

inline Json case_suite_json(const CaseSuiteReport& r) {
  Json assertions = Json::object();
  for (auto c : kCaseAssertions) {
    const auto& cnt = r.at(c);
    assertions[to_string(c)] = {{"pass", cnt.pass}, {"fail", cnt.fail}, {"vacuous", cnt.vacuous}};
  }
  return {{"pairs", r.pairs},
          {"census", r.census},
          {"assertions", assertions},
          {"failures", r.failures}};
}

inline Json theorem_json(const TheoremReport& r, const CyclicGroup& g,
                         const CaseSuiteReport& suite) {
  Json sizes = Json::array();
  for (const auto& s : r.sizes) {
    sizes.push_back({{"size", s.size},
                     {"sets", s.sets},
                     {"t1t2", s.t1t2},
                     {"tiles", s.tiles},
                     {"spectral", s.spectral},
                     {"positive", s.positive},
                     {"violations", s.violations},
                     {"inconclusive", s.inconclusive}});
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"set", elements_json(v.set_repr)},
                          {"t1", v.t1},
                          {"t2", v.t2},
                          {"tile", decided(v.tile_status)},
                          {"spectral", decided(v.spectrum_status)}});
  }
  Json inconclusive = Json::array();
  for (const auto& s : r.inconclusive) inconclusive.push_back(elements_json(s));
  return {{"schema", kReportSchema},
          {"command", "verify"},
          {"group", group_json(g)},
          {"mode", r.mode},
          {"seed", r.seed},
          {"samples_per_size", r.samples_per_size},
          {"sizes", sizes},
          {"violations", violations},
          {"inconclusive", inconclusive},
          {"errors", r.errors},
          {"witnesses",
           {{"t1t2_sets", r.witnesses.t1t2_sets},
            {"spectra_constructed", r.witnesses.spectra_constructed},
            {"tiles", r.witnesses.tiles},
            {"tiles_in_graph_form", r.witnesses.tiles_in_graph_form},
            {"graph_complements_verified", r.witnesses.graph_complements_verified}}},
          {"duality",
           {{"pairs", r.duality.pairs}, {"both_directions", r.duality.both_directions}}},
          {"case_suite", case_suite_json(suite)},
          {"ok", r.ok() && suite.ok()},
          {"timing_ms", r.elapsed_ms},
          {"budget", {{"nodes_used", r.nodes_used}, {"exhausted", !r.inconclusive.empty()}}}};
}

namespace detail {

inline std::string verdict_word(const Json& v) {
  if (v.is_null()) return "unknown (budget exhausted)";
  return v.get<bool>() ? "yes" : "no";
}

inline std::string list_text(const Json& v) {
  if (v.is_null()) return "none";
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i].get<std::uint64_t>());
  }
  return out + "}";
}

inline void text_header(std::string& out, const Json& j) {
  out += "command: " + j["command"].get<std::string>() + "\n";
  out += "group: Z_" + std::to_string(j["group"]["N"].get<std::uint64_t>()) +
         ", primes " + list_text(j["group"]["primes"]) + "\n";
}

}  // namespace detail

/// Human-readable view of a JSON report; verdicts are read from the report
/// itself so both formats agree.
inline std::string render_text(const Json& j) {
  std::string out;
  detail::text_header(out, j);
  const std::string cmd = j["command"].get<std::string>();
  if (cmd == "verify") {
    out += "mode: " + j["mode"].get<std::string>();
    if (j["mode"] == "sampled") {
      out += " (" + std::to_string(j["samples_per_size"].get<std::uint64_t>()) +
             " per size, seed " + std::to_string(j["seed"].get<std::uint64_t>()) + ")";
    }
    out += "\n";
    out += "size  sets  positive  violations  inconclusive\n";
    for (const auto& s : j["sizes"]) {
      out += std::to_string(s["size"].get<std::uint64_t>()) + "  " +
             std::to_string(s["sets"].get<std::uint64_t>()) + "  " +
             std::to_string(s["positive"].get<std::uint64_t>()) + "  " +
             std::to_string(s["violations"].get<std::uint64_t>()) + "  " +
             std::to_string(s["inconclusive"].get<std::uint64_t>()) + "\n";
    }
    for (const auto& v : j["violations"]) out += "violation: " + detail::list_text(v["set"]) + "\n";
    for (const auto& v : j["inconclusive"]) out += "inconclusive: " + detail::list_text(v) + "\n";
    for (const auto& e : j["errors"]) out += "error: " + e.get<std::string>() + "\n";
    const auto& cs = j["case_suite"];
    out += "spectral pairs checked: " + std::to_string(cs["pairs"].get<std::uint64_t>()) + "\n";
    for (const auto& [name, c] : cs["assertions"].items()) {
      out += "  " + name + ": pass " + std::to_string(c["pass"].get<std::uint64_t>()) +
             ", fail " + std::to_string(c["fail"].get<std::uint64_t>()) + ", vacuous " +
             std::to_string(c["vacuous"].get<std::uint64_t>()) + "\n";
    }
    out += std::string("result: ") + (j["ok"].get<bool>() ? "verified" : "FAILED") + "\n";
  } else if (cmd == "counterexample") {
    out += "multiset: " + detail::list_text(j["multiset"]) + "\n";
    out += "vanishes at d=1: " + detail::verdict_word(j["vanishing"]) + "\n";
    out += "prime-cycle decomposition: " + j["decomposition"]["status"].get<std::string>() + "\n";
    const auto& ll = j["lam_leung"];
    out += "size " + std::to_string(ll["size"].get<std::uint64_t>());
    if (ll["coefficients"].is_null()) {
      out += ": no nonnegative combination\n";
    } else {
      out += " =";
      const auto& primes = j["group"]["primes"];
      bool first = true;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        auto c = ll["coefficients"][i].get<std::uint64_t>();
        if (c == 0) continue;
        out += std::string(first ? " " : " + ") + std::to_string(c) + "*" +
               std::to_string(primes[i].get<std::uint64_t>());
        first = false;
      }
      out += "\n";
    }
  } else {
    out += "input: " + detail::list_text(j["input"]) + "\n";
    for (const char* key : {"vanishing", "t1", "t2", "tile", "spectral"}) {
      if (j["verdicts"].contains(key)) {
        out += std::string(key) + ": " + detail::verdict_word(j["verdicts"][key]);
        if (std::string_view(key) == "t2" && j["verdicts"].value("t2_vacuous", false)) {
          out += " (vacuous)";
        }
        out += "\n";
      }
    }
    if (j.contains("witnesses")) {
      for (const auto& [name, w] : j["witnesses"].items()) {
        out += name + ": " + detail::list_text(w) + "\n";
      }
    }
    if (j.contains("decomposition")) {
      const auto& d = j["decomposition"];
      out += "prime-cycle decomposition: " + d["status"].get<std::string>() + "\n";
      for (const auto& c : d["cycles"]) {
        out += "  " + std::to_string(c["d"].get<std::uint64_t>()) + "-cycle at " +
               std::to_string(c["base"].get<std::uint64_t>()) + "\n";
      }
    }
    const auto& z = j["zero_profile"];
    out += "divisor zeros: " + detail::list_text(z["divisor_zeros"]) + "\n";
    out += "S_A: " + detail::list_text(z["s_a"]) + "\n";
    out += "zero set: " + detail::list_text(z["full"]) + "\n";
  }
  out += "nodes used: " + std::to_string(j["budget"]["nodes_used"].get<std::uint64_t>()) + "\n";
  return out;
}

}  // namespace spectile
