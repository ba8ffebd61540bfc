#include "flexproofs/snark_bridge.hpp"

#include "flexproofs/counters.hpp"
#include "flexproofs/encoding.hpp"

namespace flexproofs {

ScalarVec eq_weights(std::span<const Fr> r) {
  ScalarVec w(1, Fr(1));
  for (const auto& x : r) {
    ScalarVec next(2 * w.size());
    Fr one_minus;
    Fr::sub(one_minus, Fr(1), x);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Fr::mul(next[2 * i], w[i], one_minus);
      Fr::mul(next[2 * i + 1], w[i], x);
    }
    w = std::move(next);
  }
  counters::add(Op::field, 2 * w.size());
  return w;
}

Bytes MleEvalProof::to_bytes() const {
  ByteWriter w;
  w.g1(c_f);
  w.raw(fc_proof.to_wire());
  const Bytes pc = pc_proof.to_bytes();
  w.raw(pc);
  w.scalar(y);
  return w.take();
}

MleEvalProof MleEvalProof::from_bytes(std::span<const std::uint8_t> data) {
  ByteReader rd(data);
  MleEvalProof p;
  p.c_f = rd.g1();
  const unsigned rounds = rd.u8();
  require(rounds < 64, Errc::malformed, "bad FC round count");
  p.fc_proof = FcBatchProof::from_bytes(rd.raw(FcBatchProof::size_bytes(rounds)), rounds);
  const unsigned k = rd.u8();
  require(k < 64, Errc::malformed, "bad PC proof length");
  p.pc_proof.q.resize(k);
  for (auto& q : p.pc_proof.q) q = rd.g1();
  p.y = rd.scalar();
  rd.expect_done();
  return p;
}

MleEvalProof prove_mle_eval(const VcParams& pp, const VcAux& aux, std::span<const Fr> r) {
  require(r.size() == pp.log_mu() + pp.log_nu(), Errc::length_mismatch,
          "point arity must equal log N");
  require(aux.polys.size() == pp.mu && aux.commitments.size() == pp.mu, Errc::invalid_argument,
          "aux does not match parameters");
  const auto r_l = r.first(pp.log_mu());
  const auto r_r = r.subspan(pp.log_mu());
  const ScalarVec t = eq_weights(r_l);

  MleEvalProof proof;
  proof.c_f = multi_exp(aux.commitments, t);
  const FcCommitment c{pairing_prod(aux.commitments, pp.fc.v)};
  const std::vector<ScalarVec> bs{t};
  const G1Vec ys{proof.c_f};
  proof.fc_proof = fc_bopen(pp.fc, c, aux.commitments, bs, ys);

  ScalarVec f(pp.nu, Fr(0));
  for (std::size_t j = 0; j < pp.mu; ++j) {
    if (t[j].isZero()) continue;
    const auto& tab = aux.polys[j].table();
    for (std::size_t a = 0; a < pp.nu; ++a) {
      Fr s;
      Fr::mul(s, tab[a], t[j]);
      Fr::add(f[a], f[a], s);
    }
  }
  counters::add(Op::field, 2 * pp.N);
  PcEval ev = pc_eval(pp.pc, MultilinearPoly(std::move(f)), r_r);
  proof.pc_proof = std::move(ev.proof);
  proof.y = ev.y;
  return proof;
}

bool verify_mle_eval(const VcParams& pp, const VcCommitment& c, std::span<const Fr> r,
                     const MleEvalProof& proof) {
  return verify_mle_eval(pp, c, r, proof.y, proof);
}

bool verify_mle_eval(const VcParams& pp, const VcCommitment& c, std::span<const Fr> r,
                     const Fr& y, const MleEvalProof& proof) {
  require(r.size() == pp.log_mu() + pp.log_nu(), Errc::length_mismatch,
          "point arity must equal log N");
  const auto r_l = r.first(pp.log_mu());
  const auto r_r = r.subspan(pp.log_mu());
  const std::vector<ScalarVec> bs{eq_weights(r_l)};
  const G1Vec ys{proof.c_f};
  if (!fc_bverify(pp.fc, c.fc, bs, ys, proof.fc_proof)) return false;
  return pc_verify(pp.pc, proof.c_f, r_r, y, proof.pc_proof);
}

}  // namespace flexproofs
