#include "flexproofs/algebra.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>

#include <omp.h>
#include <openssl/rand.h>

#include "flexproofs/counters.hpp"
#include "flexproofs/parallel.hpp"

namespace flexproofs {

namespace {

// Generators used by the Ethereum alt_bn128 precompiles (same curve).
constexpr const char* kG1Generator = "1 1 2";
constexpr const char* kG2Generator =
    "1 "
    "10857046999023057135944570762232829481370756359578518086990519993285655852781 "
    "11559732032986387107991004021392285783925812861821192530917403151452391805634 "
    "8495653923123431417604973247489272438418190587263600148770280649306958101930 "
    "4082367875863433681332203403145435568316851327593401208105741076214120093531";

// Below this size a kernel runs on the calling thread.
constexpr std::size_t kParallelCutoff = 64;

template <class G>
G msm_chunk(std::span<const G> bases, std::span<const Fr> exps) {
  G out;
  out.clear();
  if (bases.empty()) return out;
  // mcl may normalize the base array in place, so it gets a private copy.
  std::vector<G> tmp(bases.begin(), bases.end());
  G::mulVec(out, tmp.data(), exps.data(), tmp.size());
  return out;
}

template <class G>
G multi_exp_impl(std::span<const G> bases, std::span<const Fr> exps) {
  require(bases.size() == exps.size(), Errc::length_mismatch, "multi_exp: length mismatch");
  const std::size_t n = bases.size();
  const int threads = num_threads();
  if (n < kParallelCutoff || threads <= 1 || omp_in_parallel()) return msm_chunk(bases, exps);

  const std::size_t chunks = std::min<std::size_t>(threads, n / (kParallelCutoff / 2));
  std::vector<G> partial(chunks);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * c / chunks;
    const std::size_t hi = n * (c + 1) / chunks;
    partial[c] = msm_chunk(bases.subspan(lo, hi - lo), exps.subspan(lo, hi - lo));
  }
  G out;
  out.clear();
  for (const auto& p : partial) G::add(out, out, p);
  return out;
}

}  // namespace

BilinearCtx::BilinearCtx() {
  mcl::bn::initPairing(mcl::BN_SNARK1);
  mcl::bn::verifyOrderG2(true);
  order_ = Fr::getModulo();
  g1_.setStr(kG1Generator, 10);
  require(g1_.isValid() && !g1_.isZero(), Errc::invalid_argument, "G1 generator rejected by backend");
  g2_.setStr(kG2Generator, 10);
  require(g2_.isValid() && !g2_.isZero(), Errc::invalid_argument, "G2 generator rejected by backend");
  mcl::bn::pairing(gt_, g1_, g2_);
  require(G1::getSerializedByteSize() == kG1Bytes && G2::getSerializedByteSize() == kG2Bytes &&
              Fr::getByteSize() == kScalarBytes,
          Errc::invalid_argument, "unexpected serialization widths");
}

const BilinearCtx& BilinearCtx::get() {
  static const BilinearCtx ctx;
  return ctx;
}

GT pairing(const G1& a, const G2& b) {
  counters::add(Op::pairing);
  GT out;
  mcl::bn::pairing(out, a, b);
  return out;
}

GT gt_pow(const GT& x, const Fr& e) {
  counters::add(Op::gt_exp);
  GT out;
  GT::pow(out, x, e);
  return out;
}

Fr fr_inv(const Fr& x) {
  require(!x.isZero(), Errc::invalid_argument, "inverse of zero");
  Fr out;
  Fr::inv(out, x);
  return out;
}

Fr Rng::scalar() {
  BilinearCtx::get();
  std::uint64_t words[8];
  for (auto& w : words) w = engine_();
  Fr out;
  bool ok = false;
  out.setArrayMod(&ok, words, 8);
  require(ok, Errc::invalid_argument, "Rng::scalar: reduction failed");
  return out;
}

G1 Rng::g1() { return BilinearCtx::get().g1() * scalar(); }

ScalarVec Rng::scalars(std::size_t n) {
  ScalarVec out(n);
  for (auto& x : out) x = scalar();
  return out;
}

G1Vec Rng::g1s(std::size_t n) {
  G1Vec out(n);
  for (auto& p : out) p = g1();
  return out;
}

Fr random_scalar() {
  BilinearCtx::get();
  std::uint8_t buf[64];
  require(RAND_bytes(buf, sizeof(buf)) == 1, Errc::io, "system RNG failure");
  Fr out;
  bool ok = false;
  out.setArrayMod(&ok, buf, sizeof(buf));
  require(ok, Errc::invalid_argument, "random_scalar: reduction failed");
  return out;
}

G1 multi_exp(std::span<const G1> bases, std::span<const Fr> exps) {
  counters::add(Op::g1_exp, bases.size());
  return multi_exp_impl(bases, exps);
}

G2 multi_exp(std::span<const G2> bases, std::span<const Fr> exps) {
  counters::add(Op::g2_exp, bases.size());
  return multi_exp_impl(bases, exps);
}

G1 sparse_multi_exp(std::span<const G1> bases, std::span<const Fr> exps) {
  require(bases.size() == exps.size(), Errc::length_mismatch, "multi_exp: length mismatch");
  G1Vec b;
  ScalarVec e;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i].isZero()) continue;
    b.push_back(bases[i]);
    e.push_back(exps[i]);
  }
  return multi_exp(b, e);
}

GT pairing_prod(std::span<const G1> a, std::span<const G2> b) {
  require(a.size() == b.size(), Errc::length_mismatch, "pairing_prod: length mismatch");
  counters::add(Op::pairing, a.size());
  const std::size_t n = a.size();
  GT out = gt_identity();
  if (n == 0) return out;
  const int threads = num_threads();
  if (n < kParallelCutoff / 4 || threads <= 1 || omp_in_parallel()) {
    GT ml;
    mcl::bn::millerLoopVec(ml, a.data(), b.data(), n);
    mcl::bn::finalExp(out, ml);
    return out;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, n / 8);
  std::vector<GT> partial(chunks);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * c / chunks;
    const std::size_t hi = n * (c + 1) / chunks;
    mcl::bn::millerLoopVec(partial[c], a.data() + lo, b.data() + lo, hi - lo);
  }
  GT ml = partial[0];
  for (std::size_t c = 1; c < chunks; ++c) GT::mul(ml, ml, partial[c]);
  mcl::bn::finalExp(out, ml);
  return out;
}

MultilinearPoly::MultilinearPoly(ScalarVec table) : table_(std::move(table)) {
  require(!table_.empty() && is_power_of_two(table_.size()), Errc::invalid_argument,
          "multilinear table length must be a power of two");
  num_vars_ = log2_exact(table_.size());
}

MultilinearPoly MultilinearPoly::constant(const Fr& c, unsigned num_vars) {
  return MultilinearPoly(ScalarVec(std::size_t{1} << num_vars, c));
}

std::vector<std::uint8_t> bin(std::uint64_t i, unsigned k) {
  require(k < 64 && i < (std::uint64_t{1} << k), Errc::out_of_range, "bin: index out of range");
  std::vector<std::uint8_t> bits(k);
  for (unsigned p = 0; p < k; ++p) bits[p] = static_cast<std::uint8_t>((i >> (k - 1 - p)) & 1);
  return bits;
}

ScalarVec bin_point(std::uint64_t i, unsigned k) {
  const auto bits = bin(i, k);
  ScalarVec out(k);
  for (unsigned p = 0; p < k; ++p) out[p] = Fr(bits[p]);
  return out;
}

ScalarVec fix_top_variable(std::span<const Fr> table, const Fr& r) {
  require(table.size() >= 2 && table.size() % 2 == 0, Errc::invalid_argument,
          "fix_top_variable: table too small");
  const std::size_t h = table.size() / 2;
  ScalarVec out(h);
  for (std::size_t i = 0; i < h; ++i) {
    Fr d;
    Fr::sub(d, table[h + i], table[i]);
    Fr::mul(d, d, r);
    Fr::add(out[i], table[i], d);
  }
  counters::add(Op::field, 2 * h);
  return out;
}

Fr mle_eval(const MultilinearPoly& f, std::span<const Fr> x) {
  require(x.size() == f.num_vars(), Errc::length_mismatch, "mle_eval: arity mismatch");
  if (x.empty()) return f[0];
  ScalarVec cur = fix_top_variable(f.table(), x[0]);
  for (std::size_t p = 1; p < x.size(); ++p) cur = fix_top_variable(cur, x[p]);
  return cur[0];
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::uint64_t n) {
  require(is_power_of_two(n), Errc::invalid_argument, "not a power of two");
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace flexproofs
