#include <doctest.h>

#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/pc.hpp"
#include "flexproofs/reference.hpp"

using namespace flexproofs;

namespace {

const G1& g1() { return BilinearCtx::get().g1(); }

// (f - y) evaluated at x from the quotient tables: sum_a q_a(x) (x_a - r_a).
Fr quotient_identity_rhs(const MultilinearPoly& f, std::span<const Fr> r, std::span<const Fr> x) {
  const unsigned k = f.num_vars();
  Fr sum(0);
  ScalarVec cur = f.table();
  for (unsigned p = 0; p < k; ++p) {
    const std::size_t h = cur.size() / 2;
    ScalarVec q(h);
    for (std::size_t i = 0; i < h; ++i) q[i] = cur[h + i] - cur[i];
    // q depends on the low a variables; x lists the top variable first.
    const Fr qx = reference::mle_eval_bruteforce(q, x.subspan(p + 1));
    sum += qx * (x[p] - r[p]);
    cur = fix_top_variable(cur, r[p]);
  }
  return sum;
}

}  // namespace

TEST_CASE("setup") {
  const PcParams p0 = pc_setup(0);
  CHECK(p0.srs() == G1Vec{g1()});
  const PcParams p1 = pc_setup_with_trapdoor(ScalarVec{Fr(2)});
  CHECK(pc_monomial_srs(p1) == G1Vec{g1(), g1() * Fr(2)});
  const PcParams p2 = pc_setup_with_trapdoor(ScalarVec{Fr(2), Fr(3)});
  CHECK(pc_monomial_srs(p2) == G1Vec{g1(), g1() * Fr(2), g1() * Fr(3), g1() * Fr(6)});
  CHECK(p2.g2_s == G2Vec{BilinearCtx::get().g2() * Fr(2), BilinearCtx::get().g2() * Fr(3)});
  CHECK_FALSE(pc_setup(3).trapdoor.has_value());
  CHECK(pc_setup(3).srs().size() == 8);
}

TEST_CASE("commit") {
  const PcParams pp = pc_setup_with_trapdoor(ScalarVec{Fr(2), Fr(3)});
  CHECK(pc_commit(pp, MultilinearPoly(ScalarVec(4, Fr(0)))).isZero());
  CHECK(pc_commit(pp, MultilinearPoly::constant(Fr(5), 2)) == g1() * Fr(5));
  // s_0 = 2 is variable x_0, s_1 = 3 is x_1; the point lists x_1 first.
  const MultilinearPoly f(ScalarVec{Fr(1), Fr(0), Fr(0), Fr(1)});
  CHECK(pc_commit(pp, f) == g1() * reference::mle_eval_bruteforce(f.table(), ScalarVec{Fr(3), Fr(2)}));
  CHECK_THROWS_AS(pc_commit(pp, MultilinearPoly(ScalarVec(8))), Error);
}

TEST_CASE("commit is homomorphic") {
  Rng rng(1);
  for (unsigned k = 0; k <= 6; ++k) {
    const PcParams pp = pc_setup(k);
    const MultilinearPoly f(rng.scalars(std::size_t{1} << k)), g(rng.scalars(std::size_t{1} << k));
    const Fr r = rng.scalar();
    ScalarVec t(f.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = r * f[i] + g[i];
    CHECK(pc_commit(pp, MultilinearPoly(t)) == pc_commit(pp, f) * r + pc_commit(pp, g));
  }
}

TEST_CASE("eval and verify") {
  Rng rng(2);
  SUBCASE("k = 0") {
    const PcParams pp = pc_setup(0);
    const MultilinearPoly f = MultilinearPoly::constant(Fr(9), 0);
    const PcEval ev = pc_eval(pp, f, ScalarVec{});
    CHECK(ev.y == Fr(9));
    CHECK(ev.proof.q.empty());
    CHECK(pc_verify(pp, pc_commit(pp, f), ScalarVec{}, ev.y, ev.proof));
  }
  SUBCASE("hypercube points give table entries") {
    const PcParams pp = pc_setup(3);
    const MultilinearPoly f(rng.scalars(8));
    for (std::size_t i = 0; i < 8; ++i) CHECK(pc_eval(pp, f, bin_point(i, 3)).y == f[i]);
  }
  SUBCASE("k = 2 quotient identity at random points") {
    const PcParams pp = pc_setup_with_trapdoor(rng.scalars(2));
    const MultilinearPoly f(rng.scalars(4));
    const ScalarVec r = rng.scalars(2);
    const PcEval ev = pc_eval(pp, f, r);
    CHECK(ev.y == mle_eval(f, r));
    CHECK(pc_verify(pp, pc_commit(pp, f), r, ev.y, ev.proof));
    for (int p = 0; p < 20; ++p) {
      const ScalarVec x = rng.scalars(2);
      CHECK(reference::mle_eval_bruteforce(f.table(), x) - ev.y == quotient_identity_rhs(f, r, x));
    }
    // Quotient commitments against the trapdoor.
    const ScalarVec& s = *pp.trapdoor;
    const ScalarVec s_point{s[1], s[0]};
    CHECK(reference::mle_eval_bruteforce(f.table(), s_point) - ev.y ==
          quotient_identity_rhs(f, r, s_point));
  }
  SUBCASE("rejections") {
    const PcParams pp = pc_setup(4);
    const MultilinearPoly f(rng.scalars(16));
    const PcCommitment c = pc_commit(pp, f);
    const ScalarVec r = rng.scalars(4);
    const PcEval ev = pc_eval(pp, f, r);
    REQUIRE(pc_verify(pp, c, r, ev.y, ev.proof));
    CHECK_FALSE(pc_verify(pp, c, r, ev.y + Fr(1), ev.proof));
    for (unsigned a = 0; a < 4; ++a) {
      PcEvalProof bad = ev.proof;
      bad.q[a] += g1();
      CHECK_FALSE(pc_verify(pp, c, r, ev.y, bad));
    }
    const Bytes honest = ev.proof.to_bytes();
    CHECK(PcEvalProof::from_bytes(honest) == ev.proof);
    CHECK(honest.size() == PcEvalProof::size_bytes(4));
    for (int trial = 0; trial < 100; ++trial) {
      Bytes b = honest;
      const auto bit = rng.next() % (b.size() * 8);
      b[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      bool accepted = false;
      try {
        accepted = pc_verify(pp, c, r, ev.y, PcEvalProof::from_bytes(b));
      } catch (const Error&) {
      }
      CHECK_FALSE(accepted);
    }
    CHECK_THROWS_AS(pc_eval(pp, f, ScalarVec(3)), Error);
  }
}

TEST_CASE("hyper eval matches per-point eval") {
  Rng rng(3);
  for (unsigned k = 0; k <= 6; ++k) {
    const PcParams pp = pc_setup(k);
    const MultilinearPoly f(rng.scalars(std::size_t{1} << k));
    const PcCommitment c = pc_commit(pp, f);
    const auto all = pc_hyper_eval(pp, f);
    REQUIRE(all.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const PcEval ev = pc_eval(pp, f, bin_point(i, k));
      CHECK(all[i].y == f[i]);
      CHECK(all[i].proof == ev.proof);
      CHECK(pc_verify(pp, c, bin_point(i, k), all[i].y, all[i].proof));
    }
  }
  const PcParams pp = pc_setup(3);
  for (const auto& ev : pc_hyper_eval(pp, MultilinearPoly::constant(Fr(4), 3))) CHECK(ev.y == Fr(4));
}
