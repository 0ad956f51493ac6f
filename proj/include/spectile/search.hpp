#pragma once

// Shared vocabulary for the bounded combinatorial searches.

#include <cstdint>
#include <optional>

namespace spectile {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct Budget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
};

/// Exhausted means the node budget ran out before the search was decided;
/// it is never a negative answer.
enum class SearchStatus { Found, Infeasible, Exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "unknown";
}

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::Found; }
  bool infeasible() const noexcept { return status == SearchStatus::Infeasible; }
  bool exhausted() const noexcept { return status == SearchStatus::Exhausted; }
};

namespace detail {

class NodeCounter {
 public:
  explicit NodeCounter(Budget budget) : limit_(budget.max_nodes) {}

  // False once the budget is spent.
  bool tick() noexcept {
    if (used_ >= limit_) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail
}  // namespace spectile
