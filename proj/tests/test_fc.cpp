#include <doctest.h>

#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/fc.hpp"
#include "flexproofs/hooks.hpp"
#include "flexproofs/reference.hpp"

using namespace flexproofs;

namespace {

const G1& g1() { return BilinearCtx::get().g1(); }
const G2& g2() { return BilinearCtx::get().g2(); }
GT e_pow(const Fr& x) { return gt_pow(BilinearCtx::get().gt(), x); }

Fr power(const Fr& x, unsigned e) {
  Fr out(1);
  for (unsigned i = 0; i < e; ++i) Fr::mul(out, out, x);
  return out;
}

G1Vec claims(const G1Vec& a, const std::vector<ScalarVec>& bs) {
  G1Vec ys;
  for (const auto& b : bs) ys.push_back(reference::multi_exp_serial(a, b));
  return ys;
}

// Re-runs the folding recursion with the witness and checks every round
// message and the commitment update against direct recomputation.
bool recursion_oracle(const FcParams& pp, const FcCommitment& c, const G1Vec& a_in,
                      const std::vector<ScalarVec>& bs, const G1Vec& ys,
                      const FcBatchProof& proof) {
  std::vector<Digest> digests;
  for (const auto& b : bs) digests.push_back(sparse_vector_digest(b));
  const ScalarVec r = fc_aggregation_scalars(c, digests, ys);
  ScalarVec b(pp.n, Fr(0));
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t k = 0; k < pp.n; ++k) b[k] += r[i] * bs[i][k];
  }
  G1 y = g1_identity();
  for (std::size_t i = 0; i < ys.size(); ++i) y += ys[i] * r[i];

  const ScalarVec xs = fc_round_challenges(proof);
  G1Vec a = a_in;
  G2Vec v = pp.v;
  GT ct = c.value;
  G1 cg = y;
  for (unsigned j = 0; j < pp.ell; ++j) {
    const std::size_t h = a.size() / 2;
    const G1Vec al(a.begin(), a.begin() + h), ar(a.begin() + h, a.end());
    const G2Vec vl(v.begin(), v.begin() + h), vr(v.begin() + h, v.end());
    const ScalarVec bl(b.begin(), b.begin() + h), br(b.begin() + h, b.end());
    if (!(proof.l[j].t == reference::pairing_prod_serial(ar, vl))) return false;
    if (!(proof.l[j].g == reference::multi_exp_serial(ar, bl))) return false;
    if (!(proof.r[j].t == reference::pairing_prod_serial(al, vr))) return false;
    if (!(proof.r[j].g == reference::multi_exp_serial(al, br))) return false;

    const Fr x = xs[j];
    const Fr xi = fr_inv(x);
    G1Vec a2(h);
    G2Vec v2(h);
    ScalarVec b2(h);
    for (std::size_t i = 0; i < h; ++i) {
      a2[i] = al[i] + ar[i] * x;
      v2[i] = vl[i] + vr[i] * xi;
      b2[i] = bl[i] + br[i] * xi;
    }
    a = a2;
    v = v2;
    b = b2;
    GT t1, t2;
    t1 = gt_pow(proof.l[j].t, x);
    t2 = gt_pow(proof.r[j].t, xi);
    GT::mul(ct, ct, t1);
    GT::mul(ct, ct, t2);
    cg = cg + proof.l[j].g * x + proof.r[j].g * xi;
    if (!(ct == reference::pairing_prod_serial(a, v))) return false;
    if (!(cg == reference::multi_exp_serial(a, b))) return false;
  }
  return proof.a_final == a[0] && proof.v_final == v[0];
}

}  // namespace

TEST_CASE("setup builds the structured key") {
  const FcParams p1 = fc_setup(1);
  CHECK(p1.v == G2Vec{g2()});
  const FcParams p2 = fc_setup_with_trapdoor(2, Fr(2));
  CHECK(p2.v == G2Vec{g2(), g2() * Fr(4)});
  const FcParams p4 = fc_setup_with_trapdoor(4, Fr(3));
  CHECK(p4.v == G2Vec{g2(), g2() * Fr(9), g2() * Fr(81), g2() * Fr(729)});
  CHECK(p4.g1_beta == g1() * Fr(3));
  for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(p4.v_odd[i] == g2() * power(Fr(3), 2 * i + 1));
  CHECK_THROWS_AS(fc_setup(3), Error);
  CHECK_FALSE(fc_setup(8).trapdoor.has_value());
}

TEST_CASE("commit") {
  const FcParams pp = fc_setup_with_trapdoor(2, Fr(5));
  CHECK(fc_commit(pp, G1Vec(2, g1_identity())).value.isOne());
  CHECK(fc_commit(fc_setup(1), G1Vec{g1() * Fr(6)}).value == e_pow(Fr(6)));
  const Fr beta(5);
  CHECK(fc_commit(pp, G1Vec{g1() * Fr(2), g1() * Fr(3)}).value == e_pow(Fr(2) + Fr(3) * beta * beta));
  CHECK_THROWS_AS(fc_commit(pp, G1Vec(3)), Error);
}

TEST_CASE("n = 1 has no rounds") {
  const FcParams pp = fc_setup(1);
  Rng rng(1);
  const G1Vec a = rng.g1s(1);
  const FcCommitment c = fc_commit(pp, a);
  const std::vector<ScalarVec> bs{{rng.scalar()}};
  const G1Vec ys = claims(a, bs);
  const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
  CHECK(proof.rounds() == 0);
  CHECK(proof.a_final == a[0]);
  CHECK(fc_bverify(pp, c, bs, ys, proof));
}

TEST_CASE("n = 4 proof passes the verifier and the recursion oracle") {
  Rng rng(2);
  const FcParams pp = fc_setup_with_trapdoor(4, rng.scalar());
  for (std::size_t t : {1u, 3u}) {
    const G1Vec a = rng.g1s(4);
    const FcCommitment c = fc_commit(pp, a);
    std::vector<ScalarVec> bs(t);
    for (auto& b : bs) b = rng.scalars(4);
    const G1Vec ys = claims(a, bs);
    const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
    CHECK(fc_bverify(pp, c, bs, ys, proof));
    CHECK(recursion_oracle(pp, c, a, bs, ys, proof));
  }
}

TEST_CASE("correctness over sizes and batch widths") {
  Rng rng(3);
  for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
    const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
    for (std::size_t t : {1u, 2u, 5u}) {
      for (int trial = 0; trial < 3; ++trial) {
        const G1Vec a = rng.g1s(n);
        const FcCommitment c = fc_commit(pp, a);
        std::vector<ScalarVec> bs(t);
        for (auto& b : bs) b = rng.scalars(n);
        const G1Vec ys = claims(a, bs);
        CHECK(fc_bverify(pp, c, bs, ys, fc_bopen(pp, c, a, bs, ys)));
      }
    }
  }
}

TEST_CASE("wrong claims and tampered rounds are rejected") {
  Rng rng(4);
  const FcParams pp = fc_setup_with_trapdoor(16, rng.scalar());
  const G1Vec a = rng.g1s(16);
  const FcCommitment c = fc_commit(pp, a);
  const std::vector<ScalarVec> bs{rng.scalars(16), rng.scalars(16)};
  const G1Vec ys = claims(a, bs);
  const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
  REQUIRE(fc_bverify(pp, c, bs, ys, proof));

  G1Vec wrong = ys;
  wrong[1] = wrong[1] + g1();
  CHECK_FALSE(fc_bverify(pp, c, bs, wrong, proof));

  const Bytes honest = proof.to_bytes();
  for (int trial = 0; trial < 100; ++trial) {
    Bytes b = honest;
    const unsigned j = rng.next() % pp.ell;
    const std::size_t round_bytes = 2 * (BilinearCtx::kGTBytes + BilinearCtx::kG1Bytes);
    const std::size_t l_start = j * round_bytes;
    const auto bit = rng.next() % ((BilinearCtx::kGTBytes + BilinearCtx::kG1Bytes) * 8);
    b[l_start + bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool accepted = false;
    try {
      accepted = fc_bverify(pp, c, bs, ys, FcBatchProof::from_bytes(b, pp.ell));
    } catch (const Error&) {
    }
    CHECK_FALSE(accepted);
  }
}

TEST_CASE("structural errors") {
  Rng rng(5);
  const FcParams pp = fc_setup(4);
  const G1Vec a = rng.g1s(4);
  const FcCommitment c = fc_commit(pp, a);
  CHECK_THROWS_AS(fc_bopen(pp, c, a, std::vector<ScalarVec>{}, G1Vec{}), Error);
  CHECK_THROWS_AS(fc_bopen(pp, c, rng.g1s(2), std::vector<ScalarVec>{rng.scalars(4)}, G1Vec(1)),
                  Error);
  const std::vector<std::size_t> dup{1, 1};
  CHECK_THROWS_AS(fc_bopen_units(pp, c, a, dup, G1Vec{a[1], a[1]}), Error);
  const std::vector<std::size_t> out_of_range{4};
  CHECK_THROWS_AS(fc_bopen_units(pp, c, a, out_of_range, G1Vec{a[0]}), Error);
  const FcBatchProof proof = fc_bopen_units(pp, c, a, std::vector<std::size_t>{0}, G1Vec{a[0]});
  FcBatchProof short_proof = proof;
  short_proof.l.pop_back();
  short_proof.r.pop_back();
  CHECK_THROWS_AS(fc_bverify_units(pp, c, std::vector<std::size_t>{0}, G1Vec{a[0]}, short_proof),
                  Error);
}

TEST_CASE("proof size is exact and independent of t") {
  const auto& ctx = BilinearCtx::get();
  Rng rng(6);
  for (std::size_t n : {1u, 2u, 16u, 256u}) {
    const FcParams pp = fc_setup(n);
    const G1Vec a = rng.g1s(n);
    const FcCommitment c = fc_commit(pp, a);
    for (std::size_t t : {1u, 4u}) {
      std::vector<ScalarVec> bs(t);
      for (auto& b : bs) b = rng.scalars(n);
      const FcBatchProof proof = fc_bopen(pp, c, a, bs, claims(a, bs));
      const std::size_t expect = 2 * pp.ell * (ctx.sT() + ctx.s1()) + ctx.s1() + 2 * ctx.s2();
      CHECK(proof.to_bytes().size() == expect);
      CHECK(proof.to_wire().size() == expect + 1);
      CHECK(FcBatchProof::from_wire(proof.to_wire()) == proof);
    }
  }
  CHECK(FcBatchProof::size_bytes(8) == 6816);
  CHECK(FcBatchProof::size_bytes(12) == 10144);
}

TEST_CASE("unit fast path") {
  Rng rng(7);
  SUBCASE("closed-form folded scalar") {
    const ScalarVec xs = rng.scalars(4);
    const ScalarVec one{Fr(1)};
    CHECK(fc_unit_fold(std::vector<std::size_t>{0}, one, xs, 4) == Fr(1));
    Fr prod(1);
    for (const auto& x : xs) prod *= fr_inv(x);
    CHECK(fc_unit_fold(std::vector<std::size_t>{15}, one, xs, 4) == prod);
  }
  SUBCASE("matches the general fold for every index and random sets") {
    for (std::size_t n : {1u, 2u, 8u, 16u, 64u}) {
      const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
      const G1Vec a = rng.g1s(n);
      const FcCommitment c = fc_commit(pp, a);
      for (std::size_t i = 0; i < n; ++i) {
        ScalarVec u(n, Fr(0));
        u[i] = Fr(1);
        const std::vector<std::size_t> idx{i};
        const G1Vec ys{a[i]};
        const FcBatchProof fast = fc_bopen_units(pp, c, a, idx, ys);
        CHECK(fast == fc_bopen(pp, c, a, std::vector<ScalarVec>{u}, ys));
        CHECK(fc_bverify_units(pp, c, idx, ys, fast));
        CHECK(fc_bverify(pp, c, std::vector<ScalarVec>{u}, ys, fast));
        const ScalarVec xs = fc_round_challenges(fast);
        const ScalarVec r = fc_aggregation_scalars(c, std::vector<Digest>{unit_vector_digest(n, i, Fr(1))}, ys);
        ScalarVec ru(n, Fr(0));
        ru[i] = r[0];
        CHECK(fc_unit_fold(idx, r, xs, pp.ell) == fc_fold_scalars(ru, xs));
      }
      if (n >= 16) {
        const std::vector<std::size_t> idx{3, 0, n - 1, 7};
        G1Vec ys;
        for (auto i : idx) ys.push_back(a[i]);
        const FcBatchProof fast = fc_bopen_units(pp, c, a, idx, ys);
        CHECK(fc_bverify_units(pp, c, idx, ys, fast));
        std::swap(ys[0], ys[1]);
        CHECK_FALSE(fc_bverify_units(pp, c, idx, ys, fast));
      }
    }
  }
}

TEST_CASE("key proof") {
  const Fr beta(7);
  SUBCASE("l = 0") {
    const FcParams pp = fc_setup_with_trapdoor(1, beta);
    const FcKeyProof kp = fc_key_proof(pp, ScalarVec{});
    CHECK(kp.v_final == g2());
  }
  SUBCASE("polynomial oracle at l = 2") {
    const FcParams pp = fc_setup_with_trapdoor(4, beta);
    const ScalarVec xs{Fr(2), Fr(4)};
    const FcKeyProof kp = fc_key_proof(pp, xs);
    const Fr half = fr_inv(Fr(2)), quarter = fr_inv(Fr(4));
    const Fr f = (Fr(1) + half * power(beta, 4)) * (Fr(1) + quarter * power(beta, 2));
    CHECK(kp.v_final == g2() * f);
    const Fr z = fc_key_point(xs, kp.v_final);
    CHECK(fc_key_poly_eval(xs, z) == (Fr(1) + half * power(z, 4)) * (Fr(1) + quarter * power(z, 2)));
    CHECK(kp.key_proof == g2() * ((f - fc_key_poly_eval(xs, z)) / (beta - z)));
    CHECK(fc_key_verify(pp, xs, kp.v_final, kp.key_proof, z));
    CHECK_FALSE(fc_key_verify(pp, xs, kp.v_final + g2(), kp.key_proof, z));
    CHECK_FALSE(fc_key_verify(pp, xs, kp.v_final, kp.key_proof + g2(), z));
  }
  SUBCASE("dense coefficients agree with the folded key") {
    Rng rng(8);
    const FcParams pp = fc_setup_with_trapdoor(16, beta);
    const ScalarVec xs = rng.scalars(4);
    const ScalarVec coeffs = fc_key_poly(xs);
    const ScalarVec folded = fc_folded_key_coeffs(xs);
    REQUIRE(coeffs.size() == 31);
    for (std::size_t i = 0; i < 16; ++i) CHECK(coeffs[2 * i] == folded[i]);
    for (std::size_t i = 0; i + 1 < 16; ++i) CHECK(coeffs[2 * i + 1].isZero());
    CHECK(fc_key_proof(pp, xs).v_final == multi_exp(pp.v, folded));
  }
}

TEST_CASE("broken fold update hook breaks verification") {
  Rng rng(9);
  const FcParams pp = fc_setup(8);
  const G1Vec a = rng.g1s(8);
  const FcCommitment c = fc_commit(pp, a);
  const std::vector<ScalarVec> bs{rng.scalars(8)};
  const G1Vec ys = claims(a, bs);
  const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
  testing::HookGuard guard;
  testing::hooks().break_fold_update = true;
  CHECK_FALSE(fc_bverify(pp, c, bs, ys, proof));
}

TEST_CASE("perturbing one claim makes the honest proof fail") {
  Rng rng(10);
  const FcParams pp = fc_setup(8);
  for (int trial = 0; trial < 50; ++trial) {
    const G1Vec a = rng.g1s(8);
    const FcCommitment c = fc_commit(pp, a);
    std::vector<ScalarVec> bs{rng.scalars(8), rng.scalars(8), rng.scalars(8)};
    G1Vec ys = claims(a, bs);
    ys[rng.next() % 3] += g1() * rng.scalar();
    CHECK_FALSE(fc_bverify(pp, c, bs, ys, fc_bopen(pp, c, a, bs, ys)));
  }
}
