#pragma once

// PST commitment to multilinear polynomials in the Lagrange (hypercube)
// basis. A polynomial is held as its evaluation table, so committing is one
// multi-exponentiation against g1^{eq(i, s)}.
//
// Variable convention: trapdoor s[a] and quotient q[a] belong to variable
// x_a; evaluation points are ordered (x_{k-1}, ..., x_0) like bin().

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flexproofs/algebra.hpp"

namespace flexproofs {

struct PcParams {
  unsigned k = 0;
  /// lagrange[a][i] = g1^{eq(i, (s_{a-1}, ..., s_0))}: the basis for
  /// polynomials in the low a variables. lagrange[k] is the full SRS.
  std::vector<G1Vec> lagrange;
  G2Vec g2_s;  // g2^{s_a}
  /// Retained only by seeded (test) setups.
  std::optional<ScalarVec> trapdoor;

  const G1Vec& srs() const { return lagrange[k]; }
};

using PcCommitment = G1;

struct PcEvalProof {
  G1Vec q;  // q[a] commits to the quotient for variable x_a

  /// k (1 byte) || q_0 || ... || q_{k-1}.
  Bytes to_bytes() const;
  static PcEvalProof from_bytes(std::span<const std::uint8_t> data);
  static std::size_t size_bytes(unsigned k);

  bool operator==(const PcEvalProof& o) const = default;
};

struct PcEval {
  Fr y;
  PcEvalProof proof;
};

PcParams pc_setup(unsigned k);
/// Test setup with known trapdoor s = (s_0, ..., s_{k-1}).
PcParams pc_setup_with_trapdoor(std::span<const Fr> s);

PcCommitment pc_commit(const PcParams& pp, const MultilinearPoly& f);

/// y = f(r) and the k quotient commitments, computed by restricting the top
/// variable one step at a time.
PcEval pc_eval(const PcParams& pp, const MultilinearPoly& f, std::span<const Fr> r);

bool pc_verify(const PcParams& pp, const PcCommitment& c, std::span<const Fr> r, const Fr& y,
               const PcEvalProof& proof);

/// Evaluation proofs for every hypercube point, indexed by i, in O(k 2^k).
std::vector<PcEval> pc_hyper_eval(const PcParams& pp, const MultilinearPoly& f);

/// Monomial form of the SRS: entry S (a bitmask over variables) is
/// g1^{prod_{a in S} s_a}.
G1Vec pc_monomial_srs(const PcParams& pp);

}  // namespace flexproofs
