#pragma once

// Two-layer vector commitment with linear-time OpenAll.
//
// A vector m of length N is cut into mu subvectors f_j of length nu; each is
// committed with the PC scheme, and the mu PC commitments are committed
// with the FC scheme. OpenAll proves every C_j in blocks of b with FC batch
// openings, folds the randomized f_j into one polynomial g*, and runs
// HyperEval once on g*.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flexproofs/algebra.hpp"
#include "flexproofs/fc.hpp"
#include "flexproofs/pc.hpp"
#include "flexproofs/transcript.hpp"

namespace flexproofs {

struct VcParams {
  std::size_t N = 0;
  std::size_t mu = 0;     // subvector count
  std::size_t nu = 0;     // subvector length
  std::size_t batch = 0;  // b
  FcParams fc;            // length mu
  PcParams pc;            // log nu variables

  unsigned log_mu() const { return fc.ell; }
  unsigned log_nu() const { return pc.k; }
  std::size_t num_blocks() const { return (mu + batch - 1) / batch; }
  /// [begin, end) of block k; the last block is clipped at mu.
  std::pair<std::size_t, std::size_t> block_range(std::size_t k) const;
};

/// Layout rule: mu = 2^{ceil(log N / 2)}, nu = N / mu.
std::pair<std::size_t, std::size_t> vc_layout(std::size_t n);

/// Fresh trapdoors from the system CSPRNG.
VcParams vc_setup(std::size_t n, std::size_t batch);
/// Trapdoors derived from seed and retained in memory. Test and benchmark
/// use only: anyone holding the seed can break binding.
VcParams vc_setup_seeded(std::size_t n, std::size_t batch, std::uint64_t seed);
/// Same parameters with a different batch size.
VcParams vc_with_batch(const VcParams& pp, std::size_t batch);

struct VcCommitment {
  FcCommitment fc;
  bool operator==(const VcCommitment& o) const { return fc == o.fc; }
};

struct SiblingRecord {
  G1 d;
  Fr y;
  bool operator==(const SiblingRecord& o) const { return d == o.d && y == o.y; }
};

/// Step-1 output for one block, shared by every opening in the block.
struct VcBlockProof {
  G1Vec commitments;  // C_j for j in the block
  FcBatchProof proof;
};

struct VcOpening {
  static constexpr std::uint8_t kVersion = 1;

  std::shared_ptr<const VcBlockProof> block;
  Digest root{};
  Digest poly_digest{};  // digest of f_j's table
  std::vector<Digest> path;
  std::vector<SiblingRecord> siblings;  // leaf level first
  G1 d_final;
  Fr y_final;
  std::shared_ptr<const PcEvalProof> pc_proof;

  /// version || block || FC proof || root || f-digest || path || siblings
  /// || D* || y* || PC proof.
  Bytes to_bytes() const;
  static VcOpening from_bytes(std::span<const std::uint8_t> data);
  std::size_t size_bytes() const;
  /// Size without the block of PC commitments.
  std::size_t size_without_block() const;
};

struct VcAux {
  G1Vec commitments;                    // C_j
  std::vector<MultilinearPoly> polys;   // f_j
  std::shared_ptr<const std::vector<VcOpening>> cache;
};

std::pair<VcCommitment, VcAux> vc_commit(const VcParams& pp, std::span<const Fr> m);

/// Prover-side record of the fold tree, filled when requested.
struct FoldState {
  ScalarVec randomizers;            // r_j
  std::vector<G1Vec> d;             // d[level][node], leaf level first
  std::vector<std::vector<ScalarVec>> y;  // y[level][node][a]
  G1 d_final;
  ScalarVec g_final;                // table of g*
};

struct OpenAllOptions {
  /// Recommits every fold node and checks D_w = commit(g_w) and the
  /// per-level sums. Quadratic-ish; debugging only.
  bool check_fold = false;
  FoldState* fold_out = nullptr;
};

std::vector<VcOpening> vc_open_all(const VcParams& pp, const VcAux& aux, std::span<const Fr> m,
                                   const OpenAllOptions& opts = {});

/// Returns the cached opening, running OpenAll on first use.
VcOpening vc_open(const VcParams& pp, VcAux& aux, std::size_t i, std::span<const Fr> m);

bool vc_verify(const VcParams& pp, const VcCommitment& c, std::size_t i, const Fr& m_i,
               const VcOpening& opening);

/// Randomizer r_j bound to C, the Merkle root and j.
Fr vc_randomizer(const VcCommitment& c, const Digest& root, std::size_t j);
/// Merkle leaf for subvector j.
Bytes vc_leaf(const G1& c_j, const Digest& poly_digest);

struct VcSubarrayOpening {
  std::size_t index = 0;
  G1Vec commitments;  // C_j for every subvector in the sub-array
  FcBatchProof proof;

  Bytes to_bytes() const;
  static VcSubarrayOpening from_bytes(std::span<const std::uint8_t> data);
};

/// Openings for the M consecutive sub-arrays of length N / M.
std::vector<VcSubarrayOpening> vc_open_subarrays(const VcParams& pp, const VcAux& aux,
                                                 std::size_t count);
/// M is implied by |m_j|.
bool vc_verify_subarray(const VcParams& pp, const VcCommitment& c, std::size_t j,
                        std::span<const Fr> m_j, const VcSubarrayOpening& opening);

}  // namespace flexproofs
