#pragma once

// Operation counters used by the benchmarks to track cryptographic work.
// Counting is off by default; when off, each hook is a single relaxed load.

#include <atomic>
#include <cstdint>

namespace flexproofs {

enum class Op : int { pairing = 0, g1_exp, g2_exp, gt_exp, field };

struct OpCounts {
  std::uint64_t pairings = 0;
  std::uint64_t g1_exps = 0;
  std::uint64_t g2_exps = 0;
  std::uint64_t gt_exps = 0;
  std::uint64_t field_ops = 0;

  /// Pairings plus exponentiations in every group.
  std::uint64_t crypto_ops() const { return pairings + g1_exps + g2_exps + gt_exps; }
};

namespace counters {

namespace detail {
extern std::atomic<bool> g_enabled;
extern std::atomic<std::uint64_t> g_counts[5];
}  // namespace detail

inline void add(Op op, std::uint64_t n = 1) {
  if (detail::g_enabled.load(std::memory_order_relaxed)) {
    detail::g_counts[static_cast<int>(op)].fetch_add(n, std::memory_order_relaxed);
  }
}

void enable(bool on);
bool enabled();
void reset();
OpCounts read();

/// Enables and resets counting for the lifetime of the scope.
class Scope {
 public:
  Scope();
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;
  OpCounts counts() const { return read(); }

 private:
  bool was_enabled_;
};

}  // namespace counters
}  // namespace flexproofs
