#include <doctest.h>

#include "flexproofs/error.hpp"
#include "flexproofs/reference.hpp"
#include "flexproofs/snark_bridge.hpp"

using namespace flexproofs;

TEST_CASE("eq weights") {
  CHECK(eq_weights(ScalarVec{Fr(5)}) == ScalarVec{Fr(-4), Fr(5)});
  CHECK(eq_weights(ScalarVec{}) == ScalarVec{Fr(1)});
  for (std::size_t j = 0; j < 8; ++j) {
    ScalarVec u(8, Fr(0));
    u[j] = Fr(1);
    CHECK(eq_weights(bin_point(j, 3)) == u);
  }
  Rng rng(1);
  const ScalarVec r = rng.scalars(3);
  const ScalarVec w = eq_weights(r);
  for (std::size_t j = 0; j < 8; ++j) {
    ScalarVec unit(8, Fr(0));
    unit[j] = Fr(1);
    CHECK(w[j] == reference::mle_eval_bruteforce(unit, r));
  }
}

TEST_CASE("decomposition identity") {
  Rng rng(2);
  for (std::size_t n = 1; n <= 256; n *= 2) {
    const auto [mu, nu] = vc_layout(n);
    const unsigned lm = log2_exact(mu);
    const ScalarVec m = rng.scalars(n);
    for (int p = 0; p < 5; ++p) {
      const ScalarVec r = rng.scalars(log2_exact(n));
      const ScalarVec t = eq_weights(std::span<const Fr>(r).first(lm));
      Fr sum(0);
      for (std::size_t j = 0; j < mu; ++j) {
        sum += t[j] * reference::mle_eval_bruteforce(std::span<const Fr>(m).subspan(j * nu, nu),
                                                     std::span<const Fr>(r).subspan(lm));
      }
      CHECK(sum == reference::mle_eval_bruteforce(m, r));
    }
  }
}

TEST_CASE("mle evaluation proofs") {
  Rng rng(3);
  const VcParams pp = vc_setup_seeded(16, 1, 4);
  const ScalarVec m = rng.scalars(16);
  const auto [c, aux] = vc_commit(pp, m);

  SUBCASE("hypercube points") {
    for (std::size_t i = 0; i < 16; ++i) {
      const MleEvalProof proof = prove_mle_eval(pp, aux, bin_point(i, 4));
      CHECK(proof.y == m[i]);
      CHECK(verify_mle_eval(pp, c, bin_point(i, 4), proof));
    }
  }
  SUBCASE("random point") {
    const ScalarVec r = rng.scalars(4);
    const MleEvalProof proof = prove_mle_eval(pp, aux, r);
    CHECK(proof.y == reference::mle_eval_bruteforce(m, r));
    CHECK(verify_mle_eval(pp, c, r, proof));
    CHECK_FALSE(verify_mle_eval(pp, c, r, proof.y + Fr(1), proof));

    const ScalarVec t = eq_weights(std::span<const Fr>(r).first(2));
    ScalarVec f(pp.nu, Fr(0));
    for (std::size_t j = 0; j < pp.mu; ++j) {
      for (std::size_t a = 0; a < pp.nu; ++a) f[a] += t[j] * m[j * pp.nu + a];
    }
    CHECK(proof.c_f == pc_commit(pp.pc, MultilinearPoly(f)));

    const MleEvalProof back = MleEvalProof::from_bytes(proof.to_bytes());
    CHECK(verify_mle_eval(pp, c, r, back));
  }
  SUBCASE("substituted C_F with a matching PC proof fails the FC check") {
    const ScalarVec r = rng.scalars(4);
    const MleEvalProof honest = prove_mle_eval(pp, aux, r);
    ScalarVec f(pp.nu, Fr(0));
    const ScalarVec t = eq_weights(std::span<const Fr>(r).first(2));
    for (std::size_t j = 0; j < pp.mu; ++j) {
      for (std::size_t a = 0; a < pp.nu; ++a) f[a] += t[j] * m[j * pp.nu + a];
    }
    // F + 1 commits to C_F g1.
    for (auto& x : f) x += Fr(1);
    MleEvalProof forged = honest;
    forged.c_f = honest.c_f + BilinearCtx::get().g1();
    CHECK(forged.c_f == pc_commit(pp.pc, MultilinearPoly(f)));
    const PcEval ev = pc_eval(pp.pc, MultilinearPoly(f), std::span<const Fr>(r).subspan(2));
    forged.pc_proof = ev.proof;
    forged.y = ev.y;
    CHECK(pc_verify(pp.pc, forged.c_f, std::span<const Fr>(r).subspan(2), forged.y, forged.pc_proof));
    CHECK_FALSE(verify_mle_eval(pp, c, r, forged));
  }
  CHECK_THROWS_AS(prove_mle_eval(pp, aux, ScalarVec(3)), Error);
}
