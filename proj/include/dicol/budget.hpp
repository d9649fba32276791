#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace dicol {

// Work budget for searches whose worst case is exponential. A budget caps
// explored nodes and, optionally, wall-clock time; searches that hit either
// cap report an unknown verdict rather than guessing.
struct Budget {
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  std::int64_t time_limit_ms = 0;  // <= 0 means no time limit

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, 0}; }
  static Budget millis(std::int64_t ms) {
    return {std::numeric_limits<std::uint64_t>::max(), ms};
  }
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b)
      : limit_(b.node_limit),
        deadline_(b.time_limit_ms > 0
                      ? std::chrono::steady_clock::now() + std::chrono::milliseconds(b.time_limit_ms)
                      : std::chrono::steady_clock::time_point::max()) {}

  // Accounts one unit of work; false once the budget is spent. The clock is
  // polled every 4096 nodes to keep the common path cheap.
  bool tick() {
    if (spent_) return false;
    if (nodes_ >= limit_) {
      spent_ = true;
      return false;
    }
    ++nodes_;
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      spent_ = true;
      return false;
    }
    return true;
  }

  bool spent() const { return spent_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_;
  bool spent_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace dicol
