#pragma once

// Functional commitment for multi-exponentiations over G1 with batch
// opening. A vector A in G1^n is committed in GT against the structured key
// v[i] = g2^{beta^{2i}}; an opening proves t claims y_i = <A, b^(i)> at once
// with a log n round folding argument. The verifier does not fold v itself:
// the prover sends v_final together with a KZG-style quotient proof.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flexproofs/algebra.hpp"
#include "flexproofs/transcript.hpp"

namespace flexproofs {

struct FcParams {
  std::size_t n = 0;
  unsigned ell = 0;
  G2Vec v;       // g2^{beta^{2i}}, i in [0, n)
  G2Vec v_odd;   // g2^{beta^{2i+1}}, i in [0, n-1), for quotient terms
  G1 g1_beta;    // g1^beta
  /// Retained only by seeded (test) setups.
  std::optional<Fr> trapdoor;

  /// g2^{beta^j} for j in [0, 2n-1).
  G2Vec g2_powers() const;
};

struct FcCommitment {
  GT value;
  bool operator==(const FcCommitment& o) const { return value == o.value; }
};

/// (GT, G1) pair sent in each folding round.
struct FcPair {
  GT t;
  G1 g;
  bool operator==(const FcPair& o) const { return t == o.t && g == o.g; }
};

struct FcBatchProof {
  std::vector<FcPair> l;
  std::vector<FcPair> r;
  G1 a_final;
  G2 v_final;
  G2 key_proof;

  unsigned rounds() const { return static_cast<unsigned>(l.size()); }

  /// Body encoding: for each round L.GT || L.G1 || R.GT || R.G1, then
  /// A_final || v_final || key_proof. Exactly 2l(sT+s1) + s1 + 2 s2 bytes.
  Bytes to_bytes() const;
  static FcBatchProof from_bytes(std::span<const std::uint8_t> data, unsigned rounds);
  /// Self-describing wire form: one byte holding the round count, then the body.
  Bytes to_wire() const;
  static FcBatchProof from_wire(std::span<const std::uint8_t> data);
  static std::size_t size_bytes(unsigned rounds);

  bool operator==(const FcBatchProof& o) const = default;
};

/// Fresh trapdoor from the system CSPRNG; it is dropped after setup.
FcParams fc_setup(std::size_t n);
/// Test setup with a known trapdoor. Never use for real commitments.
FcParams fc_setup_with_trapdoor(std::size_t n, const Fr& beta);

FcCommitment fc_commit(const FcParams& pp, std::span<const G1> a);

/// General batch opening of claims ys[i] = <A, bs[i]>.
FcBatchProof fc_bopen(const FcParams& pp, const FcCommitment& c, std::span<const G1> a,
                      std::span<const ScalarVec> bs, std::span<const G1> ys);
bool fc_bverify(const FcParams& pp, const FcCommitment& c, std::span<const ScalarVec> bs,
                std::span<const G1> ys, const FcBatchProof& proof);

/// Unit-vector batch opening of ys[i] = A[indices[i]]. Produces the same
/// proof as fc_bopen with bs[i] = u_{indices[i]}.
FcBatchProof fc_bopen_units(const FcParams& pp, const FcCommitment& c, std::span<const G1> a,
                            std::span<const std::size_t> indices, std::span<const G1> ys);
bool fc_bverify_units(const FcParams& pp, const FcCommitment& c,
                      std::span<const std::size_t> indices, std::span<const G1> ys,
                      const FcBatchProof& proof);

// --- building blocks, exposed for tests and benchmarks ---------------------

/// Aggregation scalars r_i derived from C, the opening vectors (by digest)
/// and the claimed values.
ScalarVec fc_aggregation_scalars(const FcCommitment& c, std::span<const Digest> b_digests,
                                 std::span<const G1> ys);

/// Round challenges x_1..x_l recomputed from the proof transcript.
ScalarVec fc_round_challenges(const FcBatchProof& proof);

/// Evaluation point for the key proof, bound to x_l and v_final.
Fr fc_key_point(std::span<const Fr> challenges, const G2& v_final);

/// Dense coefficients of f(X) = prod_k (1 + x_k^{-1} X^{2^{l-k+1}}),
/// length 2n - 1 (odd coefficients are zero).
ScalarVec fc_key_poly(std::span<const Fr> challenges);
/// f(z) in O(l).
Fr fc_key_poly_eval(std::span<const Fr> challenges, const Fr& z);

/// Coefficient of v[i] in v_final: prod_k x_k^{-bit}, the folded unit vector.
ScalarVec fc_folded_key_coeffs(std::span<const Fr> challenges);

struct FcKeyProof {
  G2 v_final;
  G2 key_proof;
};
FcKeyProof fc_key_proof(const FcParams& pp, std::span<const Fr> challenges);
bool fc_key_verify(const FcParams& pp, std::span<const Fr> challenges, const G2& v_final,
                   const G2& key_proof, const Fr& z);

/// b_l for a unit batch: sum_i r_i prod_k (1/x_k)^{bit l-k of index i}.
Fr fc_unit_fold(std::span<const std::size_t> indices, std::span<const Fr> r,
                std::span<const Fr> challenges, unsigned ell);

/// b_l by explicit folding of a dense vector.
Fr fc_fold_scalars(ScalarVec b, std::span<const Fr> challenges);

}  // namespace flexproofs
