#pragma once

// Serial, unoptimized versions of the parallel kernels. They exist to check
// the fast paths in tests and to give the benchmark a baseline.

#include <span>

#include "flexproofs/algebra.hpp"

namespace flexproofs::reference {

/// Accumulates A[i] * b[i] one scalar multiplication at a time.
G1 multi_exp_serial(std::span<const G1> bases, std::span<const Fr> exps);
G2 multi_exp_serial(std::span<const G2> bases, std::span<const Fr> exps);

/// Multiplies full pairings e(A[i], B[i]) one at a time.
GT pairing_prod_serial(std::span<const G1> a, std::span<const G2> b);

/// Direct term-by-term sum over the hypercube of m[i] * prod_k eq(i_k, x_k).
Fr mle_eval_bruteforce(std::span<const Fr> table, std::span<const Fr> x);

}  // namespace flexproofs::reference
