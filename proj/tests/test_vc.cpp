#include <doctest.h>

#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/hooks.hpp"
#include "flexproofs/parallel.hpp"
#include "flexproofs/reference.hpp"
#include "flexproofs/vc.hpp"

using namespace flexproofs;

namespace {

Bytes serialize_all(const std::vector<VcOpening>& ops) {
  Bytes out;
  for (const auto& op : ops) {
    const Bytes b = op.to_bytes();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace

TEST_CASE("layout") {
  CHECK(vc_layout(4) == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(vc_layout(8) == std::pair<std::size_t, std::size_t>{4, 2});
  CHECK(vc_layout(1u << 16) == std::pair<std::size_t, std::size_t>{256, 256});
  CHECK(vc_layout(1) == std::pair<std::size_t, std::size_t>{1, 1});
  const VcParams pp = vc_setup(1u << 16, 32);
  CHECK(pp.mu == 256);
  CHECK(pp.nu == 256);
  CHECK(pp.batch == 32);
  CHECK(vc_setup(8, 2).mu == 4);
  CHECK_THROWS_AS(vc_setup(12, 1), Error);
  CHECK_THROWS_AS(vc_setup(16, 5), Error);
  CHECK_THROWS_AS(vc_setup(16, 0), Error);
}

TEST_CASE("last block is clipped") {
  const VcParams pp = vc_setup_seeded(64, 3, 1);
  CHECK(pp.num_blocks() == 3);
  CHECK(pp.block_range(2) == std::pair<std::size_t, std::size_t>{6, 8});
}

TEST_CASE("commit") {
  const VcParams pp = vc_setup_seeded(4, 1, 2);
  SUBCASE("zero vector") {
    const auto [c, aux] = vc_commit(pp, ScalarVec(4, Fr(0)));
    for (const auto& cj : aux.commitments) CHECK(cj.isZero());
    CHECK(c.fc.value.isOne());
  }
  SUBCASE("composition oracle with known trapdoors") {
    const ScalarVec m{Fr(1), Fr(2), Fr(3), Fr(4)};
    const auto [c, aux] = vc_commit(pp, m);
    const Fr s = (*pp.pc.trapdoor)[0];
    const Fr beta = *pp.fc.trapdoor;
    // f_j(s) = m[2j] (1 - s) + m[2j + 1] s; C = e(g1, g2)^{f_0(s) + f_1(s) beta^2}.
    const Fr f0 = Fr(1) * (Fr(1) - s) + Fr(2) * s;
    const Fr f1 = Fr(3) * (Fr(1) - s) + Fr(4) * s;
    CHECK(aux.commitments[0] == BilinearCtx::get().g1() * f0);
    CHECK(c.fc.value == gt_pow(BilinearCtx::get().gt(), f0 + f1 * beta * beta));
  }
  SUBCASE("swapping across the subvector boundary changes C") {
    const ScalarVec m{Fr(1), Fr(2), Fr(3), Fr(4)};
    const ScalarVec p{Fr(1), Fr(3), Fr(2), Fr(4)};
    CHECK_FALSE(vc_commit(pp, m).first == vc_commit(pp, p).first);
  }
  CHECK_THROWS_AS(vc_commit(pp, ScalarVec(3)), Error);
}

TEST_CASE("every opening verifies") {
  Rng rng(3);
  for (std::size_t n : {1u, 4u, 8u, 16u, 64u}) {
    const VcParams base = vc_setup_seeded(n, 1, rng.next());
    for (std::size_t b : {std::size_t{1}, std::size_t{2}, base.mu}) {
      if (b > base.mu) continue;
      const VcParams pp = vc_with_batch(base, b);
      const ScalarVec m = rng.scalars(n);
      const auto [c, aux] = vc_commit(pp, m);
      const auto ops = vc_open_all(pp, aux, m);
      REQUIRE(ops.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(vc_verify(pp, c, i, m[i], ops[i]));
        CHECK_FALSE(vc_verify(pp, c, i, m[i] + Fr(1), ops[i]));
        CHECK(ops[i].siblings.size() == pp.log_mu());
        CHECK(ops[i].block->commitments.size() <= b);
      }
    }
  }
}

TEST_CASE("fold tree records") {
  Rng rng(4);
  const VcParams pp = vc_setup_seeded(64, 2, 5);
  const ScalarVec m = rng.scalars(64);
  const auto [c, aux] = vc_commit(pp, m);

  SUBCASE("root level recomputes from the randomizers") {
    FoldState st;
    OpenAllOptions opts;
    opts.fold_out = &st;
    opts.check_fold = true;
    vc_open_all(pp, aux, m, opts);
    REQUIRE(st.randomizers.size() == pp.mu);
    G1 d = g1_identity();
    ScalarVec g(pp.nu, Fr(0));
    for (std::size_t j = 0; j < pp.mu; ++j) {
      d += aux.commitments[j] * st.randomizers[j];
      for (std::size_t a = 0; a < pp.nu; ++a) g[a] += st.randomizers[j] * m[j * pp.nu + a];
    }
    CHECK(st.d_final == d);
    CHECK(st.g_final == g);
  }
  SUBCASE("unit randomizers give column sums") {
    testing::HookGuard guard;
    testing::hooks().unit_randomizers = true;
    const auto ops = vc_open_all(pp, aux, m);
    for (std::size_t i = 0; i < 64; ++i) {
      const std::size_t a = i % pp.nu;
      Fr col(0);
      for (std::size_t j = 0; j < pp.mu; ++j) col += m[j * pp.nu + a];
      CHECK(ops[i].y_final == col);
      CHECK(vc_verify(pp, c, i, m[i], ops[i]));
    }
  }
  SUBCASE("inconsistent aux is reported") {
    ScalarVec other = m;
    other[5] += Fr(1);
    CHECK_THROWS_AS(vc_open_all(pp, aux, other), Error);
  }
}

TEST_CASE("open returns the cached opening") {
  Rng rng(6);
  const VcParams pp = vc_setup_seeded(16, 2, 7);
  const ScalarVec m = rng.scalars(16);
  auto [c, aux] = vc_commit(pp, m);
  const auto all = vc_open_all(pp, aux, m);
  for (std::size_t i = 0; i < 16; ++i) {
    const VcOpening op = vc_open(pp, aux, i, m);
    CHECK(op.to_bytes() == all[i].to_bytes());
    CHECK(vc_open(pp, aux, i, m).to_bytes() == op.to_bytes());
    CHECK(vc_verify(pp, c, i, m[i], op));
  }
  CHECK_THROWS_AS(vc_open(pp, aux, 16, m), Error);
}

TEST_CASE("opening encoding") {
  Rng rng(8);
  const VcParams pp = vc_setup_seeded(64, 4, 9);
  const ScalarVec m = rng.scalars(64);
  const auto [c, aux] = vc_commit(pp, m);
  const auto ops = vc_open_all(pp, aux, m);
  const Bytes b = ops[13].to_bytes();
  const VcOpening back = VcOpening::from_bytes(b);
  CHECK(back.to_bytes() == b);
  CHECK(vc_verify(pp, c, 13, m[13], back));
  CHECK(b.size() == ops[13].size_bytes());
  const auto& ctx = BilinearCtx::get();
  const std::size_t lm = pp.log_mu(), ln = pp.log_nu();
  const std::size_t expect_without_block = 1 + 4 + (1 + FcBatchProof::size_bytes(lm)) + 32 + 32 +
                                           1 + 32 * lm + 1 + lm * (ctx.s1() + 32) + ctx.s1() +
                                           32 + PcEvalProof::size_bytes(static_cast<unsigned>(ln));
  CHECK(ops[13].size_without_block() == expect_without_block);
  CHECK(ops[13].size_bytes() == expect_without_block + 4 * ctx.s1());
  Bytes bad = b;
  bad[0] ^= 1;
  CHECK_THROWS_AS(VcOpening::from_bytes(bad), Error);
  bad = b;
  bad.pop_back();
  CHECK_THROWS_AS(VcOpening::from_bytes(bad), Error);
}

TEST_CASE("tampered openings are rejected") {
  Rng rng(10);
  const VcParams pp = vc_setup_seeded(64, 2, 11);
  const ScalarVec m = rng.scalars(64);
  const auto [c, aux] = vc_commit(pp, m);
  const auto ops = vc_open_all(pp, aux, m);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t i = rng.next() % 64;
    Bytes b = ops[i].to_bytes();
    const auto bit = rng.next() % (b.size() * 8);
    b[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool accepted = false;
    try {
      accepted = vc_verify(pp, c, i, m[i], VcOpening::from_bytes(b));
    } catch (const Error&) {
    }
    CHECK_FALSE(accepted);
  }
  SUBCASE("sibling records taken from another residue are rejected") {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t i = rng.next() % 64;
      const std::size_t other = (i + 1 + rng.next() % 63) % 64;
      if (other % pp.nu == i % pp.nu && other / pp.nu == i / pp.nu) continue;
      VcOpening op = ops[i];
      const std::size_t level = rng.next() % op.siblings.size();
      op.siblings[level] = ops[other].siblings[level];
      if (op.siblings[level] == ops[i].siblings[level]) continue;
      CHECK_FALSE(vc_verify(pp, c, i, m[i], op));
    }
  }
  SUBCASE("swapping sibling records between levels keeps the folded sums") {
    // The fold combines siblings by plain sums, which commute, so a reordering
    // reaches the same D* and y*. Recorded as a known limitation.
    const std::size_t i = 21;
    VcOpening op = ops[i];
    std::swap(op.siblings[0], op.siblings[1]);
    CHECK(vc_verify(pp, c, i, m[i], op));
  }
}

TEST_CASE("open-all is deterministic across runs and thread counts") {
  Rng rng(12);
  const VcParams pp = vc_setup_seeded(64, 2, 13);
  const ScalarVec m = rng.scalars(64);
  const int saved = num_threads();
  set_num_threads(1);
  const auto [c, aux] = vc_commit(pp, m);
  const Bytes one = serialize_all(vc_open_all(pp, aux, m));
  CHECK(serialize_all(vc_open_all(pp, aux, m)) == one);
  set_num_threads(8);
  const auto [c8, aux8] = vc_commit(pp, m);
  CHECK(c8 == c);
  CHECK(serialize_all(vc_open_all(pp, aux8, m)) == one);
  set_num_threads(saved);
}

TEST_CASE("sub-array openings") {
  Rng rng(14);
  const VcParams pp = vc_setup_seeded(16, 1, 15);
  const ScalarVec m = rng.scalars(16);
  const auto [c, aux] = vc_commit(pp, m);
  SUBCASE("M = mu equals the step-1 block proofs") {
    const auto subs = vc_open_subarrays(pp, aux, pp.mu);
    const auto ops = vc_open_all(pp, aux, m);
    for (std::size_t j = 0; j < pp.mu; ++j) CHECK(subs[j].proof == ops[j * pp.nu].block->proof);
  }
  SUBCASE("N = 16, M = 4 and M = 2") {
    for (std::size_t count : {4u, 2u}) {
      const auto subs = vc_open_subarrays(pp, aux, count);
      const std::size_t len = 16 / count;
      for (std::size_t j = 0; j < count; ++j) {
        const std::span<const Fr> m_j(m.data() + j * len, len);
        CHECK(vc_verify_subarray(pp, c, j, m_j, subs[j]));
        for (std::size_t t = 0; t < subs[j].commitments.size(); ++t) {
          CHECK(subs[j].commitments[t] == aux.commitments[j * (pp.mu / count) + t]);
        }
        ScalarVec bad(m_j.begin(), m_j.end());
        bad[rng.next() % len] += Fr(1);
        CHECK_FALSE(vc_verify_subarray(pp, c, j, bad, subs[j]));
        const auto back = VcSubarrayOpening::from_bytes(subs[j].to_bytes());
        CHECK(vc_verify_subarray(pp, c, j, m_j, back));
      }
    }
  }
  CHECK_THROWS_AS(vc_open_subarrays(pp, aux, 3), Error);
  CHECK_THROWS_AS(vc_open_subarrays(pp, aux, 8), Error);
}
