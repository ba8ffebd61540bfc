#include "flexproofs/pc.hpp"

#include <omp.h>

#include "flexproofs/counters.hpp"
#include "flexproofs/encoding.hpp"
#include "flexproofs/parallel.hpp"

namespace flexproofs {

namespace {

// Table of R - L over the low variables.
ScalarVec top_difference(std::span<const Fr> table) {
  const std::size_t h = table.size() / 2;
  ScalarVec d(h);
  for (std::size_t i = 0; i < h; ++i) Fr::sub(d[i], table[h + i], table[i]);
  counters::add(Op::field, h);
  return d;
}

}  // namespace

Bytes PcEvalProof::to_bytes() const {
  require(q.size() < 256, Errc::malformed, "too many quotient elements");
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(q.size()));
  for (const auto& p : q) w.g1(p);
  return w.take();
}

PcEvalProof PcEvalProof::from_bytes(std::span<const std::uint8_t> data) {
  ByteReader rd(data);
  const unsigned k = rd.u8();
  require(rd.remaining() == k * BilinearCtx::kG1Bytes, Errc::malformed,
          "PC proof has the wrong length");
  PcEvalProof p;
  p.q.resize(k);
  for (auto& e : p.q) e = rd.g1();
  rd.expect_done();
  return p;
}

std::size_t PcEvalProof::size_bytes(unsigned k) { return 1 + k * BilinearCtx::kG1Bytes; }

PcParams pc_setup(unsigned k) {
  ScalarVec s(k);
  for (auto& x : s) x = random_scalar();
  PcParams pp = pc_setup_with_trapdoor(s);
  pp.trapdoor.reset();
  return pp;
}

PcParams pc_setup_with_trapdoor(std::span<const Fr> s) {
  require(s.size() < 32, Errc::invalid_argument, "too many variables");
  const auto& ctx = BilinearCtx::get();
  PcParams pp;
  pp.k = static_cast<unsigned>(s.size());
  pp.trapdoor = ScalarVec(s.begin(), s.end());

  // eq(i, s) over all k variables, built low variable first.
  ScalarVec eq(1, Fr(1));
  for (unsigned a = 0; a < pp.k; ++a) {
    const std::size_t h = eq.size();
    eq.resize(2 * h);
    Fr one_minus;
    Fr::sub(one_minus, Fr(1), s[a]);
    for (std::size_t i = 0; i < h; ++i) {
      Fr::mul(eq[h + i], eq[i], s[a]);
      Fr::mul(eq[i], eq[i], one_minus);
    }
  }

  pp.lagrange.resize(pp.k + 1);
  G1Vec& full = pp.lagrange[pp.k];
  full.resize(eq.size());
  const int threads = num_threads();
#pragma omp parallel for num_threads(threads) schedule(static) if (threads > 1)
  for (std::size_t i = 0; i < eq.size(); ++i) full[i] = ctx.g1() * eq[i];

  // Summing out the top variable: s_a + (1 - s_a) = 1.
  for (unsigned a = pp.k; a-- > 0;) {
    const G1Vec& up = pp.lagrange[a + 1];
    const std::size_t h = up.size() / 2;
    G1Vec& cur = pp.lagrange[a];
    cur.resize(h);
    for (std::size_t i = 0; i < h; ++i) G1::add(cur[i], up[i], up[h + i]);
  }

  pp.g2_s.resize(pp.k);
  for (unsigned a = 0; a < pp.k; ++a) pp.g2_s[a] = ctx.g2() * s[a];
  return pp;
}

PcCommitment pc_commit(const PcParams& pp, const MultilinearPoly& f) {
  require(f.num_vars() == pp.k, Errc::length_mismatch, "polynomial arity must equal k");
  return multi_exp(pp.srs(), f.table());
}

PcEval pc_eval(const PcParams& pp, const MultilinearPoly& f, std::span<const Fr> r) {
  require(f.num_vars() == pp.k, Errc::length_mismatch, "polynomial arity must equal k");
  require(r.size() == pp.k, Errc::length_mismatch, "point arity must equal k");
  PcEval out;
  out.proof.q.resize(pp.k);
  ScalarVec cur = f.table();
  for (unsigned p = 0; p < pp.k; ++p) {
    const unsigned a = pp.k - 1 - p;  // variable being restricted
    const ScalarVec d = top_difference(cur);
    out.proof.q[a] = multi_exp(pp.lagrange[a], d);
    cur = fix_top_variable(cur, r[p]);
  }
  out.y = cur[0];
  return out;
}

bool pc_verify(const PcParams& pp, const PcCommitment& c, std::span<const Fr> r, const Fr& y,
               const PcEvalProof& proof) {
  require(r.size() == pp.k, Errc::length_mismatch, "point arity must equal k");
  if (proof.q.size() != pp.k) return false;
  const auto& ctx = BilinearCtx::get();
  // e(C - y g1, -g2) * prod_a e(q_a, g2^{s_a} - r_a g2) == 1
  G1Vec lhs(pp.k + 1);
  G2Vec rhs(pp.k + 1);
  G1::sub(lhs[0], c, ctx.g1() * y);
  G2::neg(rhs[0], ctx.g2());
  for (unsigned a = 0; a < pp.k; ++a) {
    lhs[a + 1] = proof.q[a];
    G2::sub(rhs[a + 1], pp.g2_s[a], ctx.g2() * r[pp.k - 1 - a]);
  }
  counters::add(Op::g1_exp);
  counters::add(Op::g2_exp, pp.k);
  counters::add(Op::pairing, pp.k + 1);
  GT ml, e;
  mcl::bn::millerLoopVec(ml, lhs.data(), rhs.data(), lhs.size());
  mcl::bn::finalExp(e, ml);
  return e.isOne();
}

std::vector<PcEval> pc_hyper_eval(const PcParams& pp, const MultilinearPoly& f) {
  require(f.num_vars() == pp.k, Errc::length_mismatch, "polynomial arity must equal k");
  const std::size_t total = f.size();
  std::vector<PcEval> out(total);
  for (std::size_t i = 0; i < total; ++i) {
    out[i].y = f[i];
    out[i].proof.q.resize(pp.k);
  }

  // Level p holds 2^p nodes; node w owns the tables with top bits = w. The
  // quotient R - L of a node is shared by every point in its subtree.
  std::vector<ScalarVec> level{f.table()};
  const int threads = num_threads();
  for (unsigned p = 0; p < pp.k; ++p) {
    const unsigned a = pp.k - 1 - p;
    const std::size_t nodes = level.size();
    const std::size_t span = total / nodes;
    std::vector<ScalarVec> next(2 * nodes);
    G1Vec quotients(nodes);
#pragma omp parallel for num_threads(threads) schedule(dynamic) if (threads > 1 && nodes > 1)
    for (std::size_t w = 0; w < nodes; ++w) {
      const ScalarVec& t = level[w];
      const std::size_t h = t.size() / 2;
      quotients[w] = multi_exp(pp.lagrange[a], top_difference(t));
      next[2 * w].assign(t.begin(), t.begin() + h);
      next[2 * w + 1].assign(t.begin() + h, t.end());
    }
    for (std::size_t w = 0; w < nodes; ++w) {
      for (std::size_t i = w * span; i < (w + 1) * span; ++i) out[i].proof.q[a] = quotients[w];
    }
    level = std::move(next);
  }
  return out;
}

G1Vec pc_monomial_srs(const PcParams& pp) {
  G1Vec m = pp.srs();
  // Superset sums: sum over i containing S of eq(i, s) is prod_{a in S} s_a.
  for (unsigned a = 0; a < pp.k; ++a) {
    const std::size_t bit = std::size_t{1} << a;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!(i & bit)) G1::add(m[i], m[i], m[i | bit]);
    }
  }
  return m;
}

}  // namespace flexproofs
