#pragma once

// Fiat-Shamir oracles and the Merkle tree used by the multi-verifier
// non-interactive OpenAll.
//
// A Transcript is a SHAKE256 sponge keyed by a domain label. Every absorb is
// framed as  len(label) || label || len(data) || data  so distinct message
// sequences never collide. Challenges are 64 bytes of XOF output reduced
// mod p; a zero result is re-derived with an incremented retry byte.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "flexproofs/algebra.hpp"

struct evp_md_ctx_st;

namespace flexproofs {

using Digest = std::array<std::uint8_t, 32>;

namespace labels {
inline constexpr std::string_view kFcH = "FC/H";
inline constexpr std::string_view kFcHprime = "FC/Hprime";
inline constexpr std::string_view kVcRandomizer = "VC/r";
}  // namespace labels

class Transcript {
 public:
  explicit Transcript(std::string_view domain);
  ~Transcript();
  Transcript(const Transcript& other);
  Transcript& operator=(const Transcript& other);
  Transcript(Transcript&&) noexcept;
  Transcript& operator=(Transcript&&) noexcept;

  void absorb(std::string_view label, std::span<const std::uint8_t> data);
  void absorb_scalar(std::string_view label, const Fr& x);
  void absorb_g1(std::string_view label, const G1& p);
  void absorb_g2(std::string_view label, const G2& p);
  void absorb_gt(std::string_view label, const GT& x);
  void absorb_u64(std::string_view label, std::uint64_t v);

  /// Nonzero scalar bound to everything absorbed so far. The challenge is
  /// absorbed back, so consecutive calls differ.
  Fr challenge_scalar(std::string_view label);

  std::uint64_t absorbed() const { return absorbed_; }

 private:
  void update(std::span<const std::uint8_t> data);

  evp_md_ctx_st* ctx_ = nullptr;
  std::uint64_t absorbed_ = 0;
};

/// SHA-256 of the sparse encoding of v: n || (index || value) for each
/// nonzero entry. Identical for a dense vector and its sparse counterpart.
Digest sparse_vector_digest(std::span<const Fr> v);
Digest unit_vector_digest(std::size_t n, std::size_t index, const Fr& value);

/// SHA-256 over the canonical encoding of every entry in order.
Digest scalar_table_digest(std::span<const Fr> table);

Digest sha256(std::span<const std::uint8_t> data);

/// Binary Merkle tree over SHA-256 with domain-separated leaves and nodes.
/// Leaf count is padded to a power of two with a fixed empty-leaf digest.
class MerkleTree {
 public:
  static Digest hash_leaf(std::span<const std::uint8_t> leaf);
  static Digest hash_node(const Digest& left, const Digest& right);
  static const Digest& empty_leaf();

  static MerkleTree build(const std::vector<Bytes>& leaves);
  static MerkleTree build_from_digests(std::vector<Digest> leaf_digests);

  const Digest& root() const { return levels_.back().front(); }
  std::size_t leaf_count() const { return leaf_count_; }
  std::size_t depth() const { return levels_.size() - 1; }

  /// Sibling digests from the leaf level up.
  std::vector<Digest> path(std::size_t index) const;

  static bool verify(const Digest& root, std::size_t index, std::span<const std::uint8_t> leaf,
                     std::span<const Digest> path);
  static bool verify_digest(const Digest& root, std::size_t index, const Digest& leaf_digest,
                            std::span<const Digest> path);

 private:
  std::vector<std::vector<Digest>> levels_;  // levels_[0] = leaves
  std::size_t leaf_count_ = 0;
};

}  // namespace flexproofs
