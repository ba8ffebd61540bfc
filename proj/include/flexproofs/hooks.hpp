#pragma once

// Fault-injection switches for mutation smoke tests. All default to off and
// must stay off outside tests.

namespace flexproofs::testing {

struct Hooks {
  /// Verifier drops the R_j^{1/x_j} factor from the GT half of the
  /// commitment update, breaking fold consistency.
  bool break_fold_update = false;
  /// OpenAll and its verifier use r_j = 1 for every subvector.
  bool unit_randomizers = false;
};

Hooks& hooks();

/// Restores the default hooks on scope exit.
class HookGuard {
 public:
  HookGuard() : saved_(hooks()) {}
  ~HookGuard() { hooks() = saved_; }
  HookGuard(const HookGuard&) = delete;
  HookGuard& operator=(const HookGuard&) = delete;

 private:
  Hooks saved_;
};

}  // namespace flexproofs::testing
