#include "flexproofs/fc.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include <omp.h>

#include "flexproofs/counters.hpp"
#include "flexproofs/encoding.hpp"
#include "flexproofs/hooks.hpp"
#include "flexproofs/parallel.hpp"

namespace flexproofs {

namespace {

constexpr std::size_t kFoldParallelCutoff = 32;

ScalarVec invert_all(std::span<const Fr> xs) {
  ScalarVec out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = fr_inv(xs[k]);
  return out;
}

Fr round_challenge(const Fr* prev, const FcPair& l, const FcPair& r) {
  Transcript t(labels::kFcHprime);
  if (prev == nullptr) {
    t.absorb("x_prev", {});
  } else {
    t.absorb_scalar("x_prev", *prev);
  }
  t.absorb_gt("L.t", l.t);
  t.absorb_g1("L.g", l.g);
  t.absorb_gt("R.t", r.t);
  t.absorb_g1("R.g", r.g);
  return t.challenge_scalar("x");
}

// lo[i] <- lo[i] + hi[i]^e for i in [0, h).
template <class G>
void fold_group(std::vector<G>& v, std::size_t h, const Fr& e) {
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(static) if (h >= kFoldParallelCutoff && threads > 1)
  for (std::size_t i = 0; i < h; ++i) {
    G t;
    G::mul(t, v[h + i], e);
    G::add(v[i], v[i], t);
  }
  v.resize(h);
}

void fold_field(ScalarVec& b, std::size_t h, const Fr& e) {
  for (std::size_t i = 0; i < h; ++i) {
    Fr t;
    Fr::mul(t, b[h + i], e);
    Fr::add(b[i], b[i], t);
  }
  b.resize(h);
  counters::add(Op::field, 2 * h);
}

G2 key_quotient(const FcParams& pp, std::span<const Fr> xs, const G2& v_final) {
  const ScalarVec f = fc_key_poly(xs);
  const Fr z = fc_key_point(xs, v_final);
  // Synthetic division of f by (X - z); the remainder is f(z).
  const std::size_t deg = f.size() - 1;
  ScalarVec q(deg);
  q[deg - 1] = f[deg];
  for (std::size_t i = deg - 1; i >= 1; --i) {
    Fr t;
    Fr::mul(t, q[i], z);
    Fr::add(q[i - 1], f[i], t);
  }
  counters::add(Op::field, 2 * deg);
  const G2Vec powers = pp.g2_powers();
  return multi_exp(std::span<const G2>(powers).first(deg), q);
}

FcBatchProof fold_prove(const FcParams& pp, std::span<const G1> a_in, ScalarVec b) {
  G1Vec a(a_in.begin(), a_in.end());
  G2Vec v = pp.v;
  FcBatchProof proof;
  proof.l.reserve(pp.ell);
  proof.r.reserve(pp.ell);
  ScalarVec xs;
  xs.reserve(pp.ell);

  for (unsigned j = 0; j < pp.ell; ++j) {
    const std::size_t h = a.size() / 2;
    std::span<const G1> al(a.data(), h), ar(a.data() + h, h);
    std::span<const G2> vl(v.data(), h), vr(v.data() + h, h);
    std::span<const Fr> bl(b.data(), h), br(b.data() + h, h);

    FcPair l{pairing_prod(ar, vl), sparse_multi_exp(ar, bl)};
    FcPair r{pairing_prod(al, vr), sparse_multi_exp(al, br)};
    const Fr x = round_challenge(xs.empty() ? nullptr : &xs.back(), l, r);
    const Fr xinv = fr_inv(x);

    fold_group(a, h, x);
    counters::add(Op::g1_exp, h);
    fold_group(v, h, xinv);
    counters::add(Op::g2_exp, h);
    fold_field(b, h, xinv);

    proof.l.push_back(l);
    proof.r.push_back(r);
    xs.push_back(x);
  }

  proof.a_final = a[0];
  proof.v_final = v[0];
  if (pp.ell == 0) {
    proof.key_proof = g2_identity();
  } else {
    proof.key_proof = key_quotient(pp, xs, proof.v_final);
  }
  return proof;
}

using FinalScalarFn = std::function<Fr(std::span<const Fr> r, std::span<const Fr> xs)>;

bool fold_verify(const FcParams& pp, const FcCommitment& c, std::span<const Fr> r,
                 std::span<const G1> ys, const FcBatchProof& proof, const FinalScalarFn& b_final) {
  const G1 y = multi_exp(ys, r);
  const ScalarVec xs = fc_round_challenges(proof);
  const bool broken = testing::hooks().break_fold_update;

  GT ct = c.value;
  G1 c1 = y;
  for (unsigned j = 0; j < proof.rounds(); ++j) {
    const Fr xinv = fr_inv(xs[j]);
    GT::mul(ct, gt_pow(proof.l[j].t, xs[j]), ct);
    if (!broken) GT::mul(ct, ct, gt_pow(proof.r[j].t, xinv));
    G1::add(c1, c1, proof.l[j].g * xs[j]);
    G1::add(c1, c1, proof.r[j].g * xinv);
    counters::add(Op::g1_exp, 2);
  }

  if (pp.ell == 0) {
    if (!(proof.v_final == pp.v[0]) || !proof.key_proof.isZero()) return false;
  } else {
    const Fr z = fc_key_point(xs, proof.v_final);
    if (!fc_key_verify(pp, xs, proof.v_final, proof.key_proof, z)) return false;
  }

  const Fr bl = b_final(r, xs);
  counters::add(Op::g1_exp);
  return ct == pairing(proof.a_final, proof.v_final) && c1 == proof.a_final * bl;
}

void check_structure(const FcParams& pp, const FcBatchProof& proof, std::size_t t,
                     std::size_t ys) {
  require(t >= 1, Errc::invalid_argument, "batch opening needs at least one claim");
  require(t == ys, Errc::length_mismatch, "one claimed value per opening vector");
  require(proof.l.size() == pp.ell && proof.r.size() == pp.ell, Errc::malformed,
          "proof round count does not match parameters");
}

void check_indices(const FcParams& pp, std::span<const std::size_t> indices) {
  std::unordered_set<std::size_t> seen;
  for (auto i : indices) {
    require(i < pp.n, Errc::out_of_range, "unit index out of range");
    require(seen.insert(i).second, Errc::invalid_argument, "duplicate unit index");
  }
}

std::vector<Digest> unit_digests(const FcParams& pp, std::span<const std::size_t> indices) {
  std::vector<Digest> d(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) d[i] = unit_vector_digest(pp.n, indices[i], Fr(1));
  return d;
}

std::vector<Digest> dense_digests(const FcParams& pp, std::span<const ScalarVec> bs) {
  std::vector<Digest> d(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    require(bs[i].size() == pp.n, Errc::length_mismatch, "opening vector length must equal n");
    d[i] = sparse_vector_digest(bs[i]);
  }
  return d;
}

ScalarVec combine(const FcParams& pp, std::span<const ScalarVec> bs, std::span<const Fr> r) {
  ScalarVec b(pp.n, Fr(0));
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(static) if (pp.n >= 1024 && threads > 1)
  for (std::size_t e = 0; e < pp.n; ++e) {
    Fr acc = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      Fr t;
      Fr::mul(t, bs[i][e], r[i]);
      Fr::add(acc, acc, t);
    }
    b[e] = acc;
  }
  counters::add(Op::field, 2 * pp.n * bs.size());
  return b;
}

}  // namespace

G2Vec FcParams::g2_powers() const {
  G2Vec out(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) out[2 * i] = v[i];
  for (std::size_t i = 0; i + 1 < n; ++i) out[2 * i + 1] = v_odd[i];
  return out;
}

Bytes FcBatchProof::to_bytes() const {
  require(l.size() == r.size(), Errc::malformed, "unbalanced proof rounds");
  ByteWriter w;
  for (std::size_t j = 0; j < l.size(); ++j) {
    w.gt(l[j].t);
    w.g1(l[j].g);
    w.gt(r[j].t);
    w.g1(r[j].g);
  }
  w.g1(a_final);
  w.g2(v_final);
  w.g2(key_proof);
  return w.take();
}

FcBatchProof FcBatchProof::from_bytes(std::span<const std::uint8_t> data, unsigned rounds) {
  require(data.size() == size_bytes(rounds), Errc::malformed, "FC proof has the wrong length");
  ByteReader rd(data);
  FcBatchProof p;
  for (unsigned j = 0; j < rounds; ++j) {
    FcPair lp, rp;
    lp.t = rd.gt();
    lp.g = rd.g1();
    rp.t = rd.gt();
    rp.g = rd.g1();
    p.l.push_back(lp);
    p.r.push_back(rp);
  }
  p.a_final = rd.g1();
  p.v_final = rd.g2();
  p.key_proof = rd.g2();
  rd.expect_done();
  return p;
}

Bytes FcBatchProof::to_wire() const {
  require(rounds() < 64, Errc::malformed, "too many rounds");
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(rounds()));
  const Bytes body = to_bytes();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

FcBatchProof FcBatchProof::from_wire(std::span<const std::uint8_t> data) {
  require(!data.empty(), Errc::malformed, "empty FC proof");
  const unsigned rounds = data[0];
  require(rounds < 64, Errc::malformed, "FC proof round count out of range");
  return from_bytes(data.subspan(1), rounds);
}

std::size_t FcBatchProof::size_bytes(unsigned rounds) {
  const auto& ctx = BilinearCtx::get();
  return 2 * rounds * (ctx.sT() + ctx.s1()) + ctx.s1() + 2 * ctx.s2();
}

FcParams fc_setup(std::size_t n) {
  FcParams pp = fc_setup_with_trapdoor(n, random_scalar());
  pp.trapdoor.reset();
  return pp;
}

FcParams fc_setup_with_trapdoor(std::size_t n, const Fr& beta) {
  require(is_power_of_two(n), Errc::invalid_argument, "FC vector length must be a power of two");
  const auto& ctx = BilinearCtx::get();
  FcParams pp;
  pp.n = n;
  pp.ell = log2_exact(n);
  ScalarVec pw(2 * n - 1);
  pw[0] = 1;
  for (std::size_t j = 1; j < pw.size(); ++j) Fr::mul(pw[j], pw[j - 1], beta);
  pp.v.resize(n);
  pp.v_odd.resize(n - 1);
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
  for (std::size_t j = 0; j < pw.size(); ++j) {
    if (j % 2 == 0) {
      pp.v[j / 2] = ctx.g2() * pw[j];
    } else {
      pp.v_odd[j / 2] = ctx.g2() * pw[j];
    }
  }
  pp.g1_beta = ctx.g1() * beta;
  pp.trapdoor = beta;
  return pp;
}

FcCommitment fc_commit(const FcParams& pp, std::span<const G1> a) {
  require(a.size() == pp.n, Errc::length_mismatch, "commit vector length must equal n");
  return {pairing_prod(a, pp.v)};
}

ScalarVec fc_aggregation_scalars(const FcCommitment& c, std::span<const Digest> b_digests,
                                 std::span<const G1> ys) {
  require(b_digests.size() == ys.size(), Errc::length_mismatch,
          "one claimed value per opening vector");
  ScalarVec r(b_digests.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Transcript t(labels::kFcH);
    t.absorb("b_i", b_digests[i]);
    t.absorb_gt("C", c.value);
    t.absorb_u64("t", b_digests.size());
    for (const auto& d : b_digests) t.absorb("b", d);
    for (const auto& y : ys) t.absorb_g1("y", y);
    r[i] = t.challenge_scalar("r");
  }
  return r;
}

ScalarVec fc_round_challenges(const FcBatchProof& proof) {
  require(proof.l.size() == proof.r.size(), Errc::malformed, "unbalanced proof rounds");
  ScalarVec xs;
  xs.reserve(proof.rounds());
  for (unsigned j = 0; j < proof.rounds(); ++j) {
    xs.push_back(round_challenge(xs.empty() ? nullptr : &xs.back(), proof.l[j], proof.r[j]));
  }
  return xs;
}

Fr fc_key_point(std::span<const Fr> challenges, const G2& v_final) {
  Transcript t(labels::kFcHprime);
  if (challenges.empty()) {
    t.absorb("x_prev", {});
  } else {
    t.absorb_scalar("x_prev", challenges.back());
  }
  t.absorb_g2("v_final", v_final);
  return t.challenge_scalar("z");
}

ScalarVec fc_folded_key_coeffs(std::span<const Fr> challenges) {
  const ScalarVec inv = invert_all(challenges);
  const std::size_t ell = challenges.size();
  ScalarVec c(std::size_t{1} << ell);
  c[0] = 1;
  std::size_t size = 1;
  // x_k pairs with bit l-k, so x_l is bit 0 and is expanded first.
  for (std::size_t k = ell; k >= 1; --k) {
    for (std::size_t i = 0; i < size; ++i) Fr::mul(c[size + i], c[i], inv[k - 1]);
    size *= 2;
  }
  counters::add(Op::field, c.size());
  return c;
}

ScalarVec fc_key_poly(std::span<const Fr> challenges) {
  const ScalarVec even = fc_folded_key_coeffs(challenges);
  ScalarVec f(2 * even.size() - 1, Fr(0));
  for (std::size_t i = 0; i < even.size(); ++i) f[2 * i] = even[i];
  return f;
}

Fr fc_key_poly_eval(std::span<const Fr> challenges, const Fr& z) {
  const std::size_t ell = challenges.size();
  Fr out = 1;
  Fr p;
  Fr::sqr(p, z);
  for (std::size_t k = ell; k >= 1; --k) {
    Fr term;
    Fr::div(term, p, challenges[k - 1]);
    Fr::add(term, term, Fr(1));
    out *= term;
    Fr::sqr(p, p);
  }
  counters::add(Op::field, 4 * ell);
  return out;
}

FcKeyProof fc_key_proof(const FcParams& pp, std::span<const Fr> challenges) {
  require(challenges.size() == pp.ell, Errc::length_mismatch, "one challenge per round");
  const auto& ctx = BilinearCtx::get();
  if (pp.ell == 0) return {ctx.g2(), g2_identity()};
  const ScalarVec even = fc_folded_key_coeffs(challenges);
  const G2 v_final = multi_exp(std::span<const G2>(pp.v), even);
  return {v_final, key_quotient(pp, challenges, v_final)};
}

bool fc_key_verify(const FcParams& pp, std::span<const Fr> challenges, const G2& v_final,
                   const G2& key_proof, const Fr& z) {
  require(challenges.size() == pp.ell, Errc::length_mismatch, "one challenge per round");
  const auto& ctx = BilinearCtx::get();
  const Fr fz = fc_key_poly_eval(challenges, z);
  // e(g1^beta - z g1, pi) * e(-g1, v_final - f(z) g2) == 1
  G1 lhs[2];
  G2 rhs[2];
  G1::sub(lhs[0], pp.g1_beta, ctx.g1() * z);
  rhs[0] = key_proof;
  G1::neg(lhs[1], ctx.g1());
  G2::sub(rhs[1], v_final, ctx.g2() * fz);
  counters::add(Op::g1_exp);
  counters::add(Op::g2_exp);
  counters::add(Op::pairing, 2);
  GT ml, e;
  mcl::bn::millerLoopVec(ml, lhs, rhs, 2);
  mcl::bn::finalExp(e, ml);
  return e.isOne();
}

Fr fc_unit_fold(std::span<const std::size_t> indices, std::span<const Fr> r,
                std::span<const Fr> challenges, unsigned ell) {
  require(indices.size() == r.size(), Errc::length_mismatch, "one scalar per index");
  require(challenges.size() == ell, Errc::length_mismatch, "one challenge per round");
  const ScalarVec inv = invert_all(challenges);
  Fr sum = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    Fr term = r[i];
    for (unsigned k = 1; k <= ell; ++k) {
      if ((indices[i] >> (ell - k)) & 1) term *= inv[k - 1];
    }
    sum += term;
  }
  counters::add(Op::field, indices.size() * (ell + 1));
  return sum;
}

Fr fc_fold_scalars(ScalarVec b, std::span<const Fr> challenges) {
  for (const auto& x : challenges) {
    require(b.size() >= 2, Errc::length_mismatch, "too many challenges for vector length");
    fold_field(b, b.size() / 2, fr_inv(x));
  }
  require(b.size() == 1, Errc::length_mismatch, "too few challenges for vector length");
  return b[0];
}

FcBatchProof fc_bopen(const FcParams& pp, const FcCommitment& c, std::span<const G1> a,
                      std::span<const ScalarVec> bs, std::span<const G1> ys) {
  require(a.size() == pp.n, Errc::length_mismatch, "vector length must equal n");
  require(!bs.empty(), Errc::invalid_argument, "batch opening needs at least one claim");
  require(bs.size() == ys.size(), Errc::length_mismatch, "one claimed value per opening vector");
  const auto digests = dense_digests(pp, bs);
  const ScalarVec r = fc_aggregation_scalars(c, digests, ys);
  return fold_prove(pp, a, combine(pp, bs, r));
}

bool fc_bverify(const FcParams& pp, const FcCommitment& c, std::span<const ScalarVec> bs,
                std::span<const G1> ys, const FcBatchProof& proof) {
  check_structure(pp, proof, bs.size(), ys.size());
  const auto digests = dense_digests(pp, bs);
  const ScalarVec r = fc_aggregation_scalars(c, digests, ys);
  return fold_verify(pp, c, r, ys, proof, [&](std::span<const Fr> rr, std::span<const Fr> xs) {
    return fc_fold_scalars(combine(pp, bs, rr), xs);
  });
}

FcBatchProof fc_bopen_units(const FcParams& pp, const FcCommitment& c, std::span<const G1> a,
                            std::span<const std::size_t> indices, std::span<const G1> ys) {
  require(a.size() == pp.n, Errc::length_mismatch, "vector length must equal n");
  require(!indices.empty(), Errc::invalid_argument, "batch opening needs at least one claim");
  require(indices.size() == ys.size(), Errc::length_mismatch, "one claimed value per index");
  check_indices(pp, indices);
  const ScalarVec r = fc_aggregation_scalars(c, unit_digests(pp, indices), ys);
  ScalarVec b(pp.n, Fr(0));
  for (std::size_t i = 0; i < indices.size(); ++i) b[indices[i]] = r[i];
  return fold_prove(pp, a, std::move(b));
}

bool fc_bverify_units(const FcParams& pp, const FcCommitment& c,
                      std::span<const std::size_t> indices, std::span<const G1> ys,
                      const FcBatchProof& proof) {
  check_structure(pp, proof, indices.size(), ys.size());
  check_indices(pp, indices);
  const ScalarVec r = fc_aggregation_scalars(c, unit_digests(pp, indices), ys);
  return fold_verify(pp, c, r, ys, proof, [&](std::span<const Fr> rr, std::span<const Fr> xs) {
    return fc_unit_fold(indices, rr, xs, pp.ell);
  });
}

}  // namespace flexproofs
