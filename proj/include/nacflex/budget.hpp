#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nacflex {

// Work limit for exponential searches. Nodes are counted deterministically;
// the optional wall-clock deadline is checked every 1024 nodes and makes
// outcomes timing-dependent when it triggers.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }

  static Budget millis(std::uint64_t ms, std::uint64_t nodes = UINT64_MAX) {
    return Budget{nodes, std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
  }
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b) : budget_(b) {}

  // Charges one node; returns false once the budget is exhausted.
  bool charge() {
    if (exceeded_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) exceeded_ = true;
    if (budget_.deadline && (nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() > *budget_.deadline)
      exceeded_ = true;
    return !exceeded_;
  }

  bool exceeded() const noexcept { return exceeded_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Budget budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

enum class SearchStatus { Found, None, BudgetExceeded };

constexpr std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::Found; }
  bool none() const noexcept { return status == SearchStatus::None; }
  bool budget_exceeded() const noexcept { return status == SearchStatus::BudgetExceeded; }
};

}  // namespace nacflex
