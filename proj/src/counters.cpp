#include "flexproofs/counters.hpp"

namespace flexproofs::counters {

namespace detail {
std::atomic<bool> g_enabled{false};
std::atomic<std::uint64_t> g_counts[5] = {};
}  // namespace detail

void enable(bool on) { detail::g_enabled.store(on, std::memory_order_relaxed); }

bool enabled() { return detail::g_enabled.load(std::memory_order_relaxed); }

void reset() {
  for (auto& c : detail::g_counts) c.store(0, std::memory_order_relaxed);
}

OpCounts read() {
  OpCounts out;
  out.pairings = detail::g_counts[static_cast<int>(Op::pairing)].load(std::memory_order_relaxed);
  out.g1_exps = detail::g_counts[static_cast<int>(Op::g1_exp)].load(std::memory_order_relaxed);
  out.g2_exps = detail::g_counts[static_cast<int>(Op::g2_exp)].load(std::memory_order_relaxed);
  out.gt_exps = detail::g_counts[static_cast<int>(Op::gt_exp)].load(std::memory_order_relaxed);
  out.field_ops = detail::g_counts[static_cast<int>(Op::field)].load(std::memory_order_relaxed);
  return out;
}

Scope::Scope() : was_enabled_(enabled()) {
  reset();
  enable(true);
}

Scope::~Scope() { enable(was_enabled_); }

}  // namespace flexproofs::counters
