#include "flexproofs/vc.hpp"

#include <omp.h>

#include "flexproofs/counters.hpp"
#include "flexproofs/encoding.hpp"
#include "flexproofs/hooks.hpp"
#include "flexproofs/parallel.hpp"

namespace flexproofs {

namespace {

constexpr std::string_view kSetupDomain = "FLEXPROOFS/setup";

void validate_batch(std::size_t mu, std::size_t batch) {
  require(batch >= 1 && batch <= mu, Errc::invalid_argument, "batch size must lie in [1, mu]");
}

VcParams assemble(std::size_t n, std::size_t batch, FcParams fc, PcParams pc) {
  VcParams pp;
  pp.N = n;
  std::tie(pp.mu, pp.nu) = vc_layout(n);
  validate_batch(pp.mu, batch);
  pp.batch = batch;
  pp.fc = std::move(fc);
  pp.pc = std::move(pc);
  return pp;
}

std::vector<std::size_t> block_indices(const VcParams& pp, std::size_t k) {
  const auto [lo, hi] = pp.block_range(k);
  std::vector<std::size_t> idx(hi - lo);
  for (std::size_t j = lo; j < hi; ++j) idx[j - lo] = j;
  return idx;
}

void write_digest(ByteWriter& w, const Digest& d) { w.raw(d); }

Digest read_digest(ByteReader& r) {
  Digest d;
  auto b = r.raw(d.size());
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

}  // namespace

std::pair<std::size_t, std::size_t> VcParams::block_range(std::size_t k) const {
  require(k < num_blocks(), Errc::out_of_range, "block index out of range");
  return {k * batch, std::min((k + 1) * batch, mu)};
}

std::pair<std::size_t, std::size_t> vc_layout(std::size_t n) {
  require(is_power_of_two(n), Errc::invalid_argument, "vector length must be a power of two");
  const unsigned log_n = log2_exact(n);
  const std::size_t mu = std::size_t{1} << ((log_n + 1) / 2);
  return {mu, n / mu};
}

VcParams vc_setup(std::size_t n, std::size_t batch) {
  const auto [mu, nu] = vc_layout(n);
  validate_batch(mu, batch);
  return assemble(n, batch, fc_setup(mu), pc_setup(log2_exact(nu)));
}

VcParams vc_setup_seeded(std::size_t n, std::size_t batch, std::uint64_t seed) {
  const auto [mu, nu] = vc_layout(n);
  validate_batch(mu, batch);
  Transcript t(kSetupDomain);
  t.absorb_u64("seed", seed);
  const Fr beta = t.challenge_scalar("beta");
  ScalarVec s(log2_exact(nu));
  for (auto& x : s) x = t.challenge_scalar("s");
  return assemble(n, batch, fc_setup_with_trapdoor(mu, beta), pc_setup_with_trapdoor(s));
}

VcParams vc_with_batch(const VcParams& pp, std::size_t batch) {
  validate_batch(pp.mu, batch);
  VcParams out = pp;
  out.batch = batch;
  return out;
}

std::pair<VcCommitment, VcAux> vc_commit(const VcParams& pp, std::span<const Fr> m) {
  require(m.size() == pp.N, Errc::length_mismatch, "vector length must equal N");
  VcAux aux;
  aux.polys.resize(pp.mu);
  aux.commitments.resize(pp.mu);
  for (std::size_t j = 0; j < pp.mu; ++j) {
    aux.polys[j] = MultilinearPoly(ScalarVec(m.begin() + j * pp.nu, m.begin() + (j + 1) * pp.nu));
  }
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic) if (threads > 1 && pp.mu > 1)
  for (std::size_t j = 0; j < pp.mu; ++j) aux.commitments[j] = pc_commit(pp.pc, aux.polys[j]);
  VcCommitment c{fc_commit(pp.fc, aux.commitments)};
  return {c, std::move(aux)};
}

Fr vc_randomizer(const VcCommitment& c, const Digest& root, std::size_t j) {
  if (testing::hooks().unit_randomizers) return Fr(1);
  Transcript t(labels::kVcRandomizer);
  t.absorb_gt("C", c.fc.value);
  t.absorb("root", root);
  t.absorb_u64("j", j);
  return t.challenge_scalar("r");
}

Bytes vc_leaf(const G1& c_j, const Digest& poly_digest) {
  ByteWriter w;
  w.g1(c_j);
  w.raw(poly_digest);
  return w.take();
}

std::vector<VcOpening> vc_open_all(const VcParams& pp, const VcAux& aux, std::span<const Fr> m,
                                   const OpenAllOptions& opts) {
  require(m.size() == pp.N, Errc::length_mismatch, "vector length must equal N");
  require(aux.polys.size() == pp.mu && aux.commitments.size() == pp.mu, Errc::invalid_argument,
          "aux does not match parameters");
  for (std::size_t j = 0; j < pp.mu; ++j) {
    require(aux.polys[j].size() == pp.nu, Errc::invalid_argument, "aux does not match parameters");
    for (std::size_t a = 0; a < pp.nu; ++a) {
      require(aux.polys[j][a] == m[j * pp.nu + a], Errc::invalid_argument,
              "aux is inconsistent with the vector");
    }
  }
  const int threads = num_threads();
  const VcCommitment c{FcCommitment{pairing_prod(aux.commitments, pp.fc.v)}};

  // Step 1: one FC batch proof per block of b commitments.
  const std::size_t blocks = pp.num_blocks();
  std::vector<std::shared_ptr<const VcBlockProof>> block_proofs(blocks);
#pragma omp parallel for num_threads(threads) schedule(dynamic) if (threads > 1 && blocks > 1)
  for (std::size_t k = 0; k < blocks; ++k) {
    const auto idx = block_indices(pp, k);
    auto bp = std::make_shared<VcBlockProof>();
    bp->commitments.assign(aux.commitments.begin() + idx.front(),
                           aux.commitments.begin() + idx.back() + 1);
    bp->proof = fc_bopen_units(pp.fc, c.fc, aux.commitments, idx, bp->commitments);
    block_proofs[k] = std::move(bp);
  }

  // Step 2: Merkle tree over (C_j, digest(f_j)), then randomizers.
  std::vector<Digest> poly_digests(pp.mu);
  std::vector<Digest> leaves(pp.mu);
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
  for (std::size_t j = 0; j < pp.mu; ++j) {
    poly_digests[j] = scalar_table_digest(aux.polys[j].table());
    leaves[j] = MerkleTree::hash_leaf(vc_leaf(aux.commitments[j], poly_digests[j]));
  }
  const MerkleTree tree = MerkleTree::build_from_digests(leaves);
  ScalarVec r(pp.mu);
  for (std::size_t j = 0; j < pp.mu; ++j) r[j] = vc_randomizer(c, tree.root(), j);

  // Leaf states: g_j = r_j f_j, D_j = C_j^{r_j}.
  std::vector<ScalarVec> g(pp.mu);
  G1Vec d(pp.mu);
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
  for (std::size_t j = 0; j < pp.mu; ++j) {
    g[j] = aux.polys[j].table();
    for (auto& x : g[j]) x *= r[j];
    d[j] = aux.commitments[j] * r[j];
  }
  counters::add(Op::g1_exp, pp.mu);
  counters::add(Op::field, pp.N);

  std::vector<VcOpening> out(pp.N);
  for (std::size_t i = 0; i < pp.N; ++i) {
    const std::size_t j = i / pp.nu;
    out[i].block = block_proofs[j / pp.batch];
    out[i].root = tree.root();
    out[i].poly_digest = poly_digests[j];
    out[i].siblings.reserve(pp.log_mu());
  }
  std::vector<std::vector<Digest>> paths(pp.mu);
  for (std::size_t j = 0; j < pp.mu; ++j) paths[j] = tree.path(j);

  if (opts.fold_out != nullptr) {
    opts.fold_out->randomizers = r;
    opts.fold_out->d.clear();
    opts.fold_out->y.clear();
  }

  // Fold tree: each level hands every opening its sibling's (D, y_a), then
  // merges siblings by plain sums.
  for (unsigned level = 0; level < pp.log_mu(); ++level) {
    if (opts.fold_out != nullptr) {
      opts.fold_out->d.push_back(d);
      opts.fold_out->y.push_back(g);
    }
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
    for (std::size_t i = 0; i < pp.N; ++i) {
      const std::size_t w = (i / pp.nu) >> level;
      const std::size_t a = i % pp.nu;
      out[i].siblings.push_back({d[w ^ 1], g[w ^ 1][a]});
    }
    const std::size_t parents = d.size() / 2;
    std::vector<ScalarVec> g_up(parents);
    G1Vec d_up(parents);
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
    for (std::size_t w = 0; w < parents; ++w) {
      g_up[w] = hadamard<Fr>(g[2 * w], g[2 * w + 1]);
      G1::add(d_up[w], d[2 * w], d[2 * w + 1]);
    }
    counters::add(Op::field, parents * pp.nu);
    if (opts.check_fold) {
      for (std::size_t w = 0; w < parents; ++w) {
        for (std::size_t a = 0; a < pp.nu; ++a) {
          Fr s;
          Fr::add(s, g[2 * w][a], g[2 * w + 1][a]);
          require(s == g_up[w][a], Errc::invalid_argument, "fold conservation violated (y)");
        }
        G1 s;
        G1::add(s, d[2 * w], d[2 * w + 1]);
        require(s == d_up[w], Errc::invalid_argument, "fold conservation violated (D)");
        require(pc_commit(pp.pc, MultilinearPoly(g_up[w])) == d_up[w], Errc::invalid_argument,
                "fold node commitment does not match its polynomial");
      }
    }
    g = std::move(g_up);
    d = std::move(d_up);
  }

  const MultilinearPoly g_star(std::move(g[0]));
  const G1 d_star = d[0];
  if (opts.fold_out != nullptr) {
    opts.fold_out->d.push_back({d_star});
    opts.fold_out->y.push_back({g_star.table()});
    opts.fold_out->d_final = d_star;
    opts.fold_out->g_final = g_star.table();
  }
  if (opts.check_fold) {
    require(pc_commit(pp.pc, g_star) == d_star, Errc::invalid_argument,
            "folded commitment does not match the folded polynomial");
  }

  const auto evals = pc_hyper_eval(pp.pc, g_star);
  std::vector<std::shared_ptr<const PcEvalProof>> pc_proofs(pp.nu);
  for (std::size_t a = 0; a < pp.nu; ++a) {
    pc_proofs[a] = std::make_shared<const PcEvalProof>(evals[a].proof);
  }
  for (std::size_t i = 0; i < pp.N; ++i) {
    const std::size_t a = i % pp.nu;
    out[i].path = paths[i / pp.nu];
    out[i].d_final = d_star;
    out[i].y_final = evals[a].y;
    out[i].pc_proof = pc_proofs[a];
  }
  return out;
}

VcOpening vc_open(const VcParams& pp, VcAux& aux, std::size_t i, std::span<const Fr> m) {
  require(i < pp.N, Errc::out_of_range, "index out of range");
  if (!aux.cache) aux.cache = std::make_shared<const std::vector<VcOpening>>(vc_open_all(pp, aux, m));
  return (*aux.cache)[i];
}

bool vc_verify(const VcParams& pp, const VcCommitment& c, std::size_t i, const Fr& m_i,
               const VcOpening& op) {
  require(i < pp.N, Errc::out_of_range, "index out of range");
  require(op.block != nullptr && op.pc_proof != nullptr, Errc::malformed, "incomplete opening");
  const std::size_t j = i / pp.nu;
  const std::size_t a = i % pp.nu;
  const std::size_t k = j / pp.batch;
  const auto idx = block_indices(pp, k);
  require(op.block->commitments.size() == idx.size(), Errc::malformed,
          "block size does not match parameters");
  require(op.siblings.size() == pp.log_mu() && op.path.size() == pp.log_mu(), Errc::malformed,
          "opening depth does not match parameters");

  // Step 1: C_j belongs to the committed vector.
  if (!fc_bverify_units(pp.fc, c.fc, idx, op.block->commitments, op.block->proof)) return false;
  const G1& c_j = op.block->commitments[j - idx.front()];

  // Step 2: leaf membership, randomization, fold path, final evaluation.
  if (!MerkleTree::verify(op.root, j, vc_leaf(c_j, op.poly_digest), op.path)) return false;
  const Fr r = vc_randomizer(c, op.root, j);
  Fr y;
  Fr::mul(y, r, m_i);
  G1 d = c_j * r;
  counters::add(Op::g1_exp);
  for (const auto& s : op.siblings) {
    Fr::add(y, y, s.y);
    G1::add(d, d, s.d);
  }
  if (!(d == op.d_final) || !(y == op.y_final)) return false;
  return pc_verify(pp.pc, op.d_final, bin_point(a, pp.log_nu()), op.y_final, *op.pc_proof);
}

Bytes VcOpening::to_bytes() const {
  require(block != nullptr && pc_proof != nullptr, Errc::malformed, "incomplete opening");
  ByteWriter w;
  w.u8(kVersion);
  w.u32(static_cast<std::uint32_t>(block->commitments.size()));
  for (const auto& p : block->commitments) w.g1(p);
  w.raw(block->proof.to_wire());
  write_digest(w, root);
  write_digest(w, poly_digest);
  w.u8(static_cast<std::uint8_t>(path.size()));
  for (const auto& p : path) write_digest(w, p);
  w.u8(static_cast<std::uint8_t>(siblings.size()));
  for (const auto& s : siblings) {
    w.g1(s.d);
    w.scalar(s.y);
  }
  w.g1(d_final);
  w.scalar(y_final);
  w.raw(pc_proof->to_bytes());
  return w.take();
}

VcOpening VcOpening::from_bytes(std::span<const std::uint8_t> data) {
  ByteReader rd(data);
  require(rd.u8() == kVersion, Errc::malformed, "unsupported opening version");
  VcOpening op;
  auto bp = std::make_shared<VcBlockProof>();
  const std::uint32_t count = rd.u32();
  require(count >= 1 && count <= rd.remaining() / BilinearCtx::kG1Bytes, Errc::malformed,
          "bad block size");
  bp->commitments.resize(count);
  for (auto& p : bp->commitments) p = rd.g1();
  const unsigned rounds = rd.u8();
  require(rounds < 64, Errc::malformed, "bad FC round count");
  bp->proof = FcBatchProof::from_bytes(rd.raw(FcBatchProof::size_bytes(rounds)), rounds);
  op.block = std::move(bp);
  op.root = read_digest(rd);
  op.poly_digest = read_digest(rd);
  const unsigned depth = rd.u8();
  op.path.resize(depth);
  for (auto& p : op.path) p = read_digest(rd);
  const unsigned levels = rd.u8();
  op.siblings.resize(levels);
  for (auto& s : op.siblings) {
    s.d = rd.g1();
    s.y = rd.scalar();
  }
  op.d_final = rd.g1();
  op.y_final = rd.scalar();
  op.pc_proof = std::make_shared<const PcEvalProof>(PcEvalProof::from_bytes(rd.raw(rd.remaining())));
  return op;
}

std::size_t VcOpening::size_bytes() const { return to_bytes().size(); }

std::size_t VcOpening::size_without_block() const {
  return size_bytes() - block->commitments.size() * BilinearCtx::kG1Bytes;
}

std::vector<VcSubarrayOpening> vc_open_subarrays(const VcParams& pp, const VcAux& aux,
                                                 std::size_t count) {
  require(count >= 1 && count <= pp.mu && pp.mu % count == 0, Errc::invalid_argument,
          "sub-arrays must align with subvector boundaries");
  require(aux.commitments.size() == pp.mu, Errc::invalid_argument, "aux does not match parameters");
  const FcCommitment c{pairing_prod(aux.commitments, pp.fc.v)};
  const std::size_t per = pp.mu / count;
  std::vector<VcSubarrayOpening> out(count);
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic) if (threads > 1 && count > 1)
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::size_t> idx(per);
    for (std::size_t t = 0; t < per; ++t) idx[t] = s * per + t;
    out[s].index = s;
    out[s].commitments.assign(aux.commitments.begin() + s * per,
                              aux.commitments.begin() + (s + 1) * per);
    out[s].proof = fc_bopen_units(pp.fc, c, aux.commitments, idx, out[s].commitments);
  }
  return out;
}

bool vc_verify_subarray(const VcParams& pp, const VcCommitment& c, std::size_t j,
                        std::span<const Fr> m_j, const VcSubarrayOpening& op) {
  require(!m_j.empty() && pp.N % m_j.size() == 0, Errc::invalid_argument,
          "sub-array length must divide N");
  const std::size_t count = pp.N / m_j.size();
  require(count <= pp.mu && pp.mu % count == 0, Errc::invalid_argument,
          "sub-arrays must align with subvector boundaries");
  require(j < count, Errc::out_of_range, "sub-array index out of range");
  const std::size_t per = pp.mu / count;
  require(op.commitments.size() == per, Errc::malformed, "sub-array opening has the wrong size");
  if (op.index != j) return false;

  std::vector<std::size_t> idx(per);
  for (std::size_t t = 0; t < per; ++t) {
    idx[t] = j * per + t;
    const MultilinearPoly f(ScalarVec(m_j.begin() + t * pp.nu, m_j.begin() + (t + 1) * pp.nu));
    if (!(pc_commit(pp.pc, f) == op.commitments[t])) return false;
  }
  return fc_bverify_units(pp.fc, c.fc, idx, op.commitments, op.proof);
}

Bytes VcSubarrayOpening::to_bytes() const {
  ByteWriter w;
  w.u64(index);
  w.u32(static_cast<std::uint32_t>(commitments.size()));
  for (const auto& p : commitments) w.g1(p);
  w.raw(proof.to_wire());
  return w.take();
}

VcSubarrayOpening VcSubarrayOpening::from_bytes(std::span<const std::uint8_t> data) {
  ByteReader rd(data);
  VcSubarrayOpening op;
  op.index = rd.u64();
  const std::uint32_t count = rd.u32();
  require(count >= 1 && count <= rd.remaining() / BilinearCtx::kG1Bytes, Errc::malformed,
          "bad sub-array size");
  op.commitments.resize(count);
  for (auto& p : op.commitments) p = rd.g1();
  op.proof = FcBatchProof::from_wire(rd.raw(rd.remaining()));
  return op;
}

}  // namespace flexproofs
