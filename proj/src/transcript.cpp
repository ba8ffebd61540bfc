#include "flexproofs/transcript.hpp"

#include <openssl/evp.h>

#include "flexproofs/encoding.hpp"

namespace flexproofs {

namespace {

constexpr std::size_t kChallengeBytes = 64;

void check(int rc, const char* what) {
  if (rc != 1) throw Error(Errc::io, what);
}

void update_len(EVP_MD_CTX* ctx, std::uint64_t n) {
  std::uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(n >> (56 - 8 * i));
  check(EVP_DigestUpdate(ctx, b, 8), "digest update");
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr) throw Error(Errc::io, "EVP_MD_CTX_new");
    check(EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr), "sha256 init");
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, std::size_t n) {
    check(EVP_DigestUpdate(ctx_, data, n), "sha256 update");
  }
  void u64(std::uint64_t v) { update_len(ctx_, v); }
  void scalar(const Fr& x) {
    std::uint8_t b[32];
    encode_scalar(x, b);
    update(b, sizeof(b));
  }
  Digest final() {
    Digest d;
    unsigned int len = 0;
    check(EVP_DigestFinal_ex(ctx_, d.data(), &len), "sha256 final");
    return d;
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

Transcript::Transcript(std::string_view domain) : ctx_(EVP_MD_CTX_new()) {
  BilinearCtx::get();
  if (ctx_ == nullptr) throw Error(Errc::io, "EVP_MD_CTX_new");
  check(EVP_DigestInit_ex(ctx_, EVP_shake256(), nullptr), "shake256 init");
  absorb("domain", {reinterpret_cast<const std::uint8_t*>(domain.data()), domain.size()});
  absorbed_ = 0;
}

Transcript::~Transcript() { EVP_MD_CTX_free(ctx_); }

Transcript::Transcript(const Transcript& other)
    : ctx_(EVP_MD_CTX_new()), absorbed_(other.absorbed_) {
  if (ctx_ == nullptr) throw Error(Errc::io, "EVP_MD_CTX_new");
  check(EVP_MD_CTX_copy_ex(ctx_, other.ctx_), "transcript copy");
}

Transcript& Transcript::operator=(const Transcript& other) {
  if (this != &other) {
    check(EVP_MD_CTX_copy_ex(ctx_, other.ctx_), "transcript copy");
    absorbed_ = other.absorbed_;
  }
  return *this;
}

Transcript::Transcript(Transcript&& other) noexcept
    : ctx_(other.ctx_), absorbed_(other.absorbed_) {
  other.ctx_ = nullptr;
}

Transcript& Transcript::operator=(Transcript&& other) noexcept {
  std::swap(ctx_, other.ctx_);
  std::swap(absorbed_, other.absorbed_);
  return *this;
}

void Transcript::update(std::span<const std::uint8_t> data) {
  check(EVP_DigestUpdate(ctx_, data.data(), data.size()), "transcript update");
}

void Transcript::absorb(std::string_view label, std::span<const std::uint8_t> data) {
  require(ctx_ != nullptr, Errc::invalid_argument, "use of moved-from transcript");
  update_len(ctx_, label.size());
  update({reinterpret_cast<const std::uint8_t*>(label.data()), label.size()});
  update_len(ctx_, data.size());
  update(data);
  ++absorbed_;
}

void Transcript::absorb_scalar(std::string_view label, const Fr& x) { absorb(label, to_bytes(x)); }
void Transcript::absorb_g1(std::string_view label, const G1& p) { absorb(label, to_bytes(p)); }
void Transcript::absorb_g2(std::string_view label, const G2& p) { absorb(label, to_bytes(p)); }
void Transcript::absorb_gt(std::string_view label, const GT& x) { absorb(label, to_bytes(x)); }

void Transcript::absorb_u64(std::string_view label, std::uint64_t v) {
  ByteWriter w;
  w.u64(v);
  absorb(label, w.bytes());
}

Fr Transcript::challenge_scalar(std::string_view label) {
  for (unsigned retry = 0; retry < 256; ++retry) {
    Transcript fork(*this);
    Bytes tag(label.begin(), label.end());
    tag.push_back(static_cast<std::uint8_t>(retry));
    fork.absorb("challenge", tag);
    std::uint8_t out[kChallengeBytes];
    check(EVP_DigestFinalXOF(fork.ctx_, out, sizeof(out)), "shake256 squeeze");
    Fr x;
    bool ok = false;
    x.setBigEndianMod(&ok, out, sizeof(out));
    require(ok, Errc::invalid_argument, "challenge reduction failed");
    if (x.isZero()) continue;
    absorb(label, to_bytes(x));
    return x;
  }
  throw Error(Errc::invalid_argument, "challenge derivation exhausted retries");
}

Digest sparse_vector_digest(std::span<const Fr> v) {
  Sha256 h;
  h.u64(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    h.u64(i);
    h.scalar(v[i]);
  }
  return h.final();
}

Digest unit_vector_digest(std::size_t n, std::size_t index, const Fr& value) {
  require(index < n, Errc::out_of_range, "unit vector index out of range");
  Sha256 h;
  h.u64(n);
  if (!value.isZero()) {
    h.u64(index);
    h.scalar(value);
  }
  return h.final();
}

Digest scalar_table_digest(std::span<const Fr> table) {
  Sha256 h;
  h.u64(table.size());
  for (const auto& x : table) h.scalar(x);
  return h.final();
}

Digest sha256(std::span<const std::uint8_t> data) {
  Sha256 h;
  h.update(data.data(), data.size());
  return h.final();
}

Digest MerkleTree::hash_leaf(std::span<const std::uint8_t> leaf) {
  Sha256 h;
  const std::uint8_t tag = 0x00;
  h.update(&tag, 1);
  h.update(leaf.data(), leaf.size());
  return h.final();
}

Digest MerkleTree::hash_node(const Digest& left, const Digest& right) {
  Sha256 h;
  const std::uint8_t tag = 0x01;
  h.update(&tag, 1);
  h.update(left.data(), left.size());
  h.update(right.data(), right.size());
  return h.final();
}

const Digest& MerkleTree::empty_leaf() {
  static const Digest d = [] {
    Sha256 h;
    const std::uint8_t tag = 0x02;
    h.update(&tag, 1);
    return h.final();
  }();
  return d;
}

MerkleTree MerkleTree::build(const std::vector<Bytes>& leaves) {
  std::vector<Digest> d(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) d[i] = hash_leaf(leaves[i]);
  return build_from_digests(std::move(d));
}

MerkleTree MerkleTree::build_from_digests(std::vector<Digest> leaf_digests) {
  require(!leaf_digests.empty(), Errc::invalid_argument, "Merkle tree needs at least one leaf");
  MerkleTree t;
  t.leaf_count_ = leaf_digests.size();
  std::size_t width = 1;
  while (width < leaf_digests.size()) width <<= 1;
  leaf_digests.resize(width, empty_leaf());
  t.levels_.push_back(std::move(leaf_digests));
  while (t.levels_.back().size() > 1) {
    const auto& below = t.levels_.back();
    std::vector<Digest> up(below.size() / 2);
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = hash_node(below[2 * i], below[2 * i + 1]);
    t.levels_.push_back(std::move(up));
  }
  return t;
}

std::vector<Digest> MerkleTree::path(std::size_t index) const {
  require(index < leaf_count_, Errc::out_of_range, "Merkle leaf index out of range");
  std::vector<Digest> out;
  out.reserve(depth());
  for (std::size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
    out.push_back(levels_[lvl][index ^ 1]);
    index >>= 1;
  }
  return out;
}

bool MerkleTree::verify(const Digest& root, std::size_t index, std::span<const std::uint8_t> leaf,
                        std::span<const Digest> path) {
  return verify_digest(root, index, hash_leaf(leaf), path);
}

bool MerkleTree::verify_digest(const Digest& root, std::size_t index, const Digest& leaf_digest,
                               std::span<const Digest> path) {
  if (path.size() < 64 && (index >> path.size()) != 0) return false;
  Digest cur = leaf_digest;
  for (const auto& sib : path) {
    cur = (index & 1) ? hash_node(sib, cur) : hash_node(cur, sib);
    index >>= 1;
  }
  return cur == root;
}

}  // namespace flexproofs
