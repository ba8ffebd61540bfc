#include <doctest.h>

#include "flexproofs/algebra.hpp"
#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/parallel.hpp"
#include "flexproofs/reference.hpp"

using namespace flexproofs;

namespace {

G1 g1_pow(std::int64_t e) { return BilinearCtx::get().g1() * Fr(e); }
G2 g2_pow(std::int64_t e) { return BilinearCtx::get().g2() * Fr(e); }

}  // namespace

TEST_CASE("context exposes the serialization widths") {
  const auto& ctx = BilinearCtx::get();
  CHECK(ctx.s1() == 32);
  CHECK(ctx.s2() == 64);
  CHECK(ctx.sT() == 384);
  CHECK(to_bytes(ctx.g1()).size() == ctx.s1());
  CHECK(to_bytes(ctx.g2()).size() == ctx.s2());
  CHECK(to_bytes(ctx.gt()).size() == ctx.sT());
  CHECK_FALSE(ctx.g1().isZero());
  CHECK_FALSE(ctx.gt().isOne());
}

TEST_CASE("pairing is bilinear for small exponents") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const std::int64_t a = 1 + rng.next() % 1000, b = 1 + rng.next() % 1000;
    CHECK(pairing(g1_pow(a), g2_pow(b)) == gt_pow(BilinearCtx::get().gt(), Fr(a * b)));
  }
}

TEST_CASE("multi_exp") {
  Rng rng(1);
  const G1Vec a = rng.g1s(8);
  CHECK(multi_exp(a, ScalarVec(8, Fr(0))).isZero());
  CHECK(multi_exp(G1Vec{}, ScalarVec{}).isZero());
  for (std::size_t i = 0; i < 8; ++i) {
    ScalarVec u(8, Fr(0));
    u[i] = Fr(1);
    CHECK(multi_exp(a, u) == a[i]);
  }
  CHECK(multi_exp(G1Vec{g1_pow(2), g1_pow(3)}, ScalarVec{Fr(5), Fr(7)}) == g1_pow(31));
  CHECK_THROWS_AS(multi_exp(a, ScalarVec(7)), Error);
}

TEST_CASE("multi_exp is additive in the exponents") {
  Rng rng(2);
  const G1Vec a = rng.g1s(16);
  ScalarVec b(16), c(16), bc(16);
  for (std::size_t i = 0; i < 16; ++i) {
    b[i] = rng.small_scalar(100);
    c[i] = rng.small_scalar(100);
    Fr::add(bc[i], b[i], c[i]);
  }
  CHECK(multi_exp(a, bc) == multi_exp(a, b) + multi_exp(a, c));
}

TEST_CASE("parallel kernels match the serial reference") {
  Rng rng(3);
  for (std::size_t n : {1u, 17u, 100u, 1000u}) {
    const G1Vec a = rng.g1s(n);
    const ScalarVec b = rng.scalars(n);
    CHECK(multi_exp(a, b) == reference::multi_exp_serial(a, b));
    G2Vec q(n);
    for (auto& p : q) p = BilinearCtx::get().g2() * rng.scalar();
    CHECK(multi_exp(q, b) == reference::multi_exp_serial(q, b));
    if (n <= 100) CHECK(pairing_prod(a, q) == reference::pairing_prod_serial(a, q));
  }
}

TEST_CASE("pairing_prod") {
  CHECK(pairing_prod(G1Vec(3, g1_identity()), G2Vec(3, BilinearCtx::get().g2())).isOne());
  CHECK(pairing_prod(G1Vec{}, G2Vec{}).isOne());
  CHECK(pairing_prod(G1Vec{g1_pow(6)}, G2Vec{g2_pow(7)}) ==
        gt_pow(BilinearCtx::get().gt(), Fr(42)));
  CHECK(pairing_prod(G1Vec{g1_pow(2), g1_pow(3)}, G2Vec{g2_pow(5), g2_pow(7)}) ==
        gt_pow(BilinearCtx::get().gt(), Fr(31)));

  Rng rng(4);
  const G1Vec a = rng.g1s(8);
  G2Vec b(8);
  for (auto& p : b) p = BilinearCtx::get().g2() * rng.scalar();
  const auto [al, ar] = split_lr<G1>(a);
  const auto [bl, br] = split_lr<G2>(b);
  GT lr;
  GT::mul(lr, pairing_prod(al, bl), pairing_prod(ar, br));
  CHECK(pairing_prod(a, b) == lr);
  CHECK_THROWS_AS(pairing_prod(a, G2Vec(7)), Error);
}

TEST_CASE("hadamard, vec_pow and split_lr") {
  Rng rng(5);
  const G1Vec a = rng.g1s(4);
  CHECK(hadamard<G1>(a, G1Vec(4, g1_identity())) == a);
  CHECK(vec_pow<G1>(a, Fr(1)) == a);
  const ScalarVec v{Fr(1), Fr(2), Fr(3), Fr(4)};
  const auto [l, r] = split_lr<Fr>(v);
  CHECK(ScalarVec(l.begin(), l.end()) == ScalarVec{Fr(1), Fr(2)});
  CHECK(ScalarVec(r.begin(), r.end()) == ScalarVec{Fr(3), Fr(4)});
  CHECK_THROWS_AS(split_lr<Fr>(ScalarVec(3)), Error);
  CHECK_THROWS_AS(hadamard<G1>(a, G1Vec(3)), Error);
}

TEST_CASE("bin") {
  CHECK(bin(0, 3) == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(bin(5, 3) == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(bin(6, 3) == std::vector<std::uint8_t>{1, 1, 0});
  CHECK_THROWS_AS(bin(8, 3), Error);
}

TEST_CASE("mle_eval") {
  const MultilinearPoly f(ScalarVec{Fr(3), Fr(5)});
  CHECK(mle_eval(f, ScalarVec{Fr(2)}) == Fr(7));
  CHECK(mle_eval(MultilinearPoly::constant(Fr(9), 3), ScalarVec{Fr(4), Fr(-2), Fr(11)}) == Fr(9));
  CHECK_THROWS_AS(mle_eval(f, ScalarVec{}), Error);

  Rng rng(6);
  for (unsigned k = 0; k <= 6; ++k) {
    const MultilinearPoly g(rng.scalars(std::size_t{1} << k));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(mle_eval(g, bin_point(i, k)) == g[i]);
    const ScalarVec x = rng.scalars(k);
    CHECK(mle_eval(g, x) == reference::mle_eval_bruteforce(g.table(), x));
  }
}

TEST_CASE("scalar encoding is canonical big-endian") {
  const Bytes b = to_bytes(Fr(258));
  REQUIRE(b.size() == 32);
  CHECK(b[31] == 2);
  CHECK(b[30] == 1);
  Bytes over(32, 0xff);
  ByteReader rd(over);
  CHECK_THROWS_AS(rd.scalar(), Error);
}
