#pragma once

// Evaluation proofs for the multilinear extension of the committed vector
// at an arbitrary point, for use as the commitment layer of a SNARK.
//
// The point r splits into r_L (the log mu high coordinates, selecting the
// subvector) and r_R (the log nu low coordinates). With T = eq(r_L, .) the
// prover commits to F = sum_j T_j f_j as C_F = prod_j C_j^{T_j}, proves C_F
// against the FC commitment, and proves F(r_R) = y against C_F.

#include <span>

#include "flexproofs/vc.hpp"

namespace flexproofs {

/// eq(r, j) for every j in [0, 2^|r|); r[0] pairs with the top bit of j.
ScalarVec eq_weights(std::span<const Fr> r);

struct MleEvalProof {
  G1 c_f;
  FcBatchProof fc_proof;
  PcEvalProof pc_proof;
  Fr y;

  /// C_F || FC proof (with round byte) || PC proof || y.
  Bytes to_bytes() const;
  static MleEvalProof from_bytes(std::span<const std::uint8_t> data);
};

MleEvalProof prove_mle_eval(const VcParams& pp, const VcAux& aux, std::span<const Fr> r);

/// Checks the proof for its own y.
bool verify_mle_eval(const VcParams& pp, const VcCommitment& c, std::span<const Fr> r,
                     const MleEvalProof& proof);
/// Checks the proof for a caller-supplied y.
bool verify_mle_eval(const VcParams& pp, const VcCommitment& c, std::span<const Fr> r,
                     const Fr& y, const MleEvalProof& proof);

}  // namespace flexproofs
