#pragma once

// Property checks shared by the selftest subcommand and the acceptance
// binary. Each check is deterministic for a given seed.

#include <cstdint>
#include <string>
#include <vector>

namespace flexproofs::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// fc_bverify accepts fc_bopen for every n in ns, t in ts, over trials runs.
CheckResult fc_correctness(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ts,
                           int trials, std::uint64_t seed);
/// Every opening verifies for N in ns, over vectors random vectors each.
CheckResult vc_correctness(const std::vector<std::size_t>& ns, int vectors, std::uint64_t seed);
/// HyperEval proofs equal per-point Eval proofs for every k <= max_k.
CheckResult hyper_eval_equivalence(unsigned max_k, std::uint64_t seed);
/// Unit-vector fast path matches the general fold for every single index,
/// n <= max_n, plus random index sets.
CheckResult unit_fast_path(std::size_t max_n, std::uint64_t seed);
/// f_m(r) = sum_j T_j(r_L) f_j(r_R) at random points, N <= max_n.
CheckResult decomposition_identity(std::size_t max_n, int points, std::uint64_t seed);

/// One line per proof type: single-bit corruptions that must all be rejected.
std::vector<CheckResult> tamper_fuzz(int flips, std::uint64_t seed);

/// OpenAll output is byte-identical across two runs and across thread counts.
CheckResult open_all_determinism(std::size_t n, std::size_t batch, int threads_a, int threads_b,
                                 std::uint64_t seed);

/// Perturbing one claimed value in a batch makes the honest proof fail.
CheckResult batch_perturbation(int trials, std::uint64_t seed);

/// Fold-tree conservation recorded during OpenAll with the debug check on.
CheckResult fold_conservation(const std::vector<std::size_t>& ns, std::uint64_t seed);

/// Snark bridge: verify_mle_eval accepts at every hypercube point with y = m[i].
CheckResult mle_hypercube_consistency(std::size_t max_n, std::uint64_t seed);

/// The full selftest matrix at N <= 256.
std::vector<CheckResult> selftest_suite(std::uint64_t seed);

}  // namespace flexproofs::checks
