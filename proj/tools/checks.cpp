#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/fc.hpp"
#include "flexproofs/parallel.hpp"
#include "flexproofs/pc.hpp"
#include "flexproofs/reference.hpp"
#include "flexproofs/snark_bridge.hpp"
#include "flexproofs/vc.hpp"

namespace flexproofs::checks {

namespace {

CheckResult result(std::string name, std::size_t ok, std::size_t total, std::string extra = {}) {
  std::ostringstream os;
  os << ok << "/" << total;
  if (!extra.empty()) os << " " << extra;
  return {std::move(name), ok == total && total > 0, os.str()};
}

G1Vec claims(std::span<const G1> a, std::span<const ScalarVec> bs) {
  G1Vec ys;
  for (const auto& b : bs) ys.push_back(reference::multi_exp_serial(a, b));
  return ys;
}

ScalarVec random_vector(Rng& rng, std::size_t n) { return rng.scalars(n); }

std::vector<std::size_t> capped_batches(std::size_t mu) {
  std::size_t root = 1;
  while (root * root < mu) root *= 2;
  std::vector<std::size_t> out{1, std::min<std::size_t>(2, mu), std::min(root, mu)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A corrupted encoding counts as rejected when decoding throws or the
// decoded proof fails verification.
std::size_t count_rejections(const Bytes& honest, int flips, Rng& rng,
                             const std::function<bool(const Bytes&)>& accepts) {
  std::size_t rejected = 0;
  for (int f = 0; f < flips; ++f) {
    Bytes b = honest;
    const std::uint64_t bit = rng.next() % (b.size() * 8);
    b[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool ok = false;
    try {
      ok = accepts(b);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++rejected;
  }
  return rejected;
}

}  // namespace

CheckResult fc_correctness(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ts,
                           int trials, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (std::size_t n : ns) {
    const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
    for (std::size_t t : ts) {
      for (int trial = 0; trial < trials; ++trial) {
        const G1Vec a = rng.g1s(n);
        std::vector<ScalarVec> bs(t);
        for (auto& b : bs) b = random_vector(rng, n);
        const G1Vec ys = claims(a, bs);
        const FcCommitment c = fc_commit(pp, a);
        const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
        ++total;
        if (fc_bverify(pp, c, bs, ys, proof)) ++ok;
      }
    }
  }
  return result("fc correctness", ok, total);
}

CheckResult vc_correctness(const std::vector<std::size_t>& ns, int vectors, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (std::size_t n : ns) {
    const VcParams base = vc_setup_seeded(n, 1, rng.next());
    for (std::size_t b : capped_batches(base.mu)) {
      const VcParams pp = vc_with_batch(base, b);
      for (int v = 0; v < vectors; ++v) {
        const ScalarVec m = random_vector(rng, n);
        const auto [c, aux] = vc_commit(pp, m);
        const auto openings = vc_open_all(pp, aux, m);
        for (std::size_t i = 0; i < n; ++i) {
          ++total;
          if (vc_verify(pp, c, i, m[i], openings[i])) ++ok;
        }
      }
    }
  }
  return result("vc correctness", ok, total);
}

CheckResult hyper_eval_equivalence(unsigned max_k, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (unsigned k = 0; k <= max_k; ++k) {
    const PcParams pp = pc_setup_with_trapdoor(rng.scalars(k));
    const MultilinearPoly f(rng.scalars(std::size_t{1} << k));
    const PcCommitment c = pc_commit(pp, f);
    const auto all = pc_hyper_eval(pp, f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const ScalarVec r = bin_point(i, k);
      const PcEval single = pc_eval(pp, f, r);
      ++total;
      if (single.proof == all[i].proof && single.y == all[i].y && all[i].y == f[i] &&
          pc_verify(pp, c, r, all[i].y, all[i].proof)) {
        ++ok;
      }
    }
  }
  return result("hypereval equals eval", ok, total);
}

CheckResult unit_fast_path(std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  auto compare = [&](const FcParams& pp, const FcCommitment& c, const G1Vec& a,
                     const std::vector<std::size_t>& idx) {
    G1Vec ys;
    std::vector<ScalarVec> bs;
    std::vector<Digest> digests;
    for (std::size_t i : idx) {
      ys.push_back(a[i]);
      ScalarVec u(pp.n, Fr(0));
      u[i] = Fr(1);
      bs.push_back(std::move(u));
      digests.push_back(unit_vector_digest(pp.n, i, Fr(1)));
    }
    const FcBatchProof fast = fc_bopen_units(pp, c, a, idx, ys);
    const FcBatchProof general = fc_bopen(pp, c, a, bs, ys);
    const ScalarVec r = fc_aggregation_scalars(c, digests, ys);
    const ScalarVec xs = fc_round_challenges(fast);
    ScalarVec combined(pp.n, Fr(0));
    for (std::size_t t = 0; t < idx.size(); ++t) Fr::add(combined[idx[t]], combined[idx[t]], r[t]);

    G1Vec wrong = ys;
    wrong[0] = wrong[0] + BilinearCtx::get().g1();
    const bool same_accept = fc_bverify_units(pp, c, idx, ys, fast) && fc_bverify(pp, c, bs, ys, fast);
    const bool same_reject =
        !fc_bverify_units(pp, c, idx, wrong, fast) && !fc_bverify(pp, c, bs, wrong, fast);
    ++total;
    if (fast == general && same_accept && same_reject &&
        fc_unit_fold(idx, r, xs, pp.ell) == fc_fold_scalars(combined, xs)) {
      ++ok;
    }
  };
  for (std::size_t n = 1; n <= max_n; n *= 2) {
    const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
    const G1Vec a = rng.g1s(n);
    const FcCommitment c = fc_commit(pp, a);
    for (std::size_t i = 0; i < n; ++i) compare(pp, c, a, {i});
    if (n >= 4) {
      for (int s = 0; s < 4; ++s) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), std::size_t{0});
        for (std::size_t p = 0; p < 4; ++p) std::swap(all[p], all[p + rng.next() % (n - p)]);
        compare(pp, c, a, {all.begin(), all.begin() + 4});
      }
    }
  }
  return result("unit fast path equals general fold", ok, total);
}

CheckResult decomposition_identity(std::size_t max_n, int points, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (std::size_t n = 1; n <= max_n; n *= 2) {
    const auto [mu, nu] = vc_layout(n);
    const unsigned lm = log2_exact(mu);
    const ScalarVec m = random_vector(rng, n);
    for (int p = 0; p < points; ++p) {
      const ScalarVec r = rng.scalars(log2_exact(n));
      const ScalarVec t = eq_weights(std::span<const Fr>(r).first(lm));
      Fr sum(0);
      for (std::size_t j = 0; j < mu; ++j) {
        const std::span<const Fr> f_j(m.data() + j * nu, nu);
        Fr e = reference::mle_eval_bruteforce(f_j, std::span<const Fr>(r).subspan(lm));
        Fr::mul(e, e, t[j]);
        Fr::add(sum, sum, e);
      }
      ++total;
      if (sum == reference::mle_eval_bruteforce(m, r)) ++ok;
    }
  }
  return result("decomposition identity", ok, total);
}

std::vector<CheckResult> tamper_fuzz(int flips, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;

  {
    const std::size_t n = 16;
    const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
    const G1Vec a = rng.g1s(n);
    std::vector<ScalarVec> bs{rng.scalars(n), rng.scalars(n)};
    const G1Vec ys = claims(a, bs);
    const FcCommitment c = fc_commit(pp, a);
    const Bytes honest = fc_bopen(pp, c, a, bs, ys).to_bytes();
    const std::size_t rej = count_rejections(honest, flips, rng, [&](const Bytes& b) {
      return fc_bverify(pp, c, bs, ys, FcBatchProof::from_bytes(b, pp.ell));
    });
    out.push_back(result("tamper fc batch proof", rej, flips));
  }
  {
    const unsigned k = 5;
    const PcParams pp = pc_setup_with_trapdoor(rng.scalars(k));
    const MultilinearPoly f(rng.scalars(std::size_t{1} << k));
    const ScalarVec r = rng.scalars(k);
    const PcEval ev = pc_eval(pp, f, r);
    const PcCommitment c = pc_commit(pp, f);
    const std::size_t rej = count_rejections(ev.proof.to_bytes(), flips, rng, [&](const Bytes& b) {
      return pc_verify(pp, c, r, ev.y, PcEvalProof::from_bytes(b));
    });
    out.push_back(result("tamper pc eval proof", rej, flips));
  }
  {
    const std::size_t n = 64;
    const VcParams pp = vc_setup_seeded(n, 2, rng.next());
    const ScalarVec m = random_vector(rng, n);
    const auto [c, aux] = vc_commit(pp, m);
    const auto openings = vc_open_all(pp, aux, m);
    const std::size_t i = rng.next() % n;
    const std::size_t rej = count_rejections(openings[i].to_bytes(), flips, rng, [&](const Bytes& b) {
      return vc_verify(pp, c, i, m[i], VcOpening::from_bytes(b));
    });
    out.push_back(result("tamper vc opening", rej, flips));

    const ScalarVec r = rng.scalars(log2_exact(n));
    const MleEvalProof proof = prove_mle_eval(pp, aux, r);
    const std::size_t rej2 = count_rejections(proof.to_bytes(), flips, rng, [&](const Bytes& b) {
      return verify_mle_eval(pp, c, r, MleEvalProof::from_bytes(b));
    });
    out.push_back(result("tamper mle eval proof", rej2, flips));
  }
  return out;
}

CheckResult open_all_determinism(std::size_t n, std::size_t batch, int threads_a, int threads_b,
                                 std::uint64_t seed) {
  Rng rng(seed);
  const VcParams pp = vc_setup_seeded(n, batch, rng.next());
  const ScalarVec m = random_vector(rng, n);
  const int saved = num_threads();
  auto run = [&](int threads) {
    set_num_threads(threads);
    const auto [c, aux] = vc_commit(pp, m);
    Bytes all = to_bytes(c.fc.value);
    for (const auto& op : vc_open_all(pp, aux, m)) {
      const Bytes b = op.to_bytes();
      all.insert(all.end(), b.begin(), b.end());
    }
    return all;
  };
  const Bytes first = run(threads_a);
  const Bytes second = run(threads_a);
  const Bytes third = run(threads_b);
  set_num_threads(saved);
  std::ostringstream os;
  os << "threads " << threads_a << " vs " << threads_b << ", " << first.size() << " bytes";
  return {"fiat-shamir determinism", first == second && first == third, os.str()};
}

CheckResult batch_perturbation(int trials, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 8, t = 4;
  const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
  std::size_t rejected = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const G1Vec a = rng.g1s(n);
    std::vector<ScalarVec> bs(t);
    for (auto& b : bs) b = rng.scalars(n);
    G1Vec ys = claims(a, bs);
    const FcCommitment c = fc_commit(pp, a);
    const std::size_t j = rng.next() % t;
    Fr delta;
    do {
      delta = rng.scalar();
    } while (delta.isZero());
    ys[j] = ys[j] + BilinearCtx::get().g1() * delta;
    const FcBatchProof proof = fc_bopen(pp, c, a, bs, ys);
    if (!fc_bverify(pp, c, bs, ys, proof)) ++rejected;
  }
  return result("perturbed claim rejected", rejected, trials);
}

CheckResult fold_conservation(const std::vector<std::size_t>& ns, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (std::size_t n : ns) {
    const VcParams pp = vc_setup_seeded(n, 1, rng.next());
    const ScalarVec m = random_vector(rng, n);
    const auto [c, aux] = vc_commit(pp, m);
    OpenAllOptions opts;
    opts.check_fold = true;
    ++total;
    try {
      vc_open_all(pp, aux, m, opts);
      ++ok;
    } catch (const Error&) {
    }
  }
  return result("fold conservation", ok, total);
}

CheckResult mle_hypercube_consistency(std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ok = 0, total = 0;
  for (std::size_t n = 1; n <= max_n; n *= 4) {
    const VcParams pp = vc_setup_seeded(n, 1, rng.next());
    const ScalarVec m = random_vector(rng, n);
    const auto [c, aux] = vc_commit(pp, m);
    for (std::size_t i = 0; i < n; ++i) {
      const ScalarVec r = bin_point(i, log2_exact(n));
      const MleEvalProof proof = prove_mle_eval(pp, aux, r);
      ++total;
      if (proof.y == m[i] && verify_mle_eval(pp, c, r, m[i], proof)) ++ok;
    }
  }
  return result("mle eval at hypercube points", ok, total);
}

std::vector<CheckResult> selftest_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(fc_correctness({1, 2, 4, 8, 16}, {1, 2, 5}, 5, seed));
  out.push_back(vc_correctness({4, 16, 64, 256}, 1, seed + 1));
  out.push_back(hyper_eval_equivalence(6, seed + 2));
  out.push_back(unit_fast_path(64, seed + 3));
  out.push_back(decomposition_identity(256, 10, seed + 4));
  for (auto& r : tamper_fuzz(20, seed + 5)) out.push_back(std::move(r));
  out.push_back(open_all_determinism(64, 2, 1, 4, seed + 6));
  out.push_back(batch_perturbation(50, seed + 7));
  out.push_back(fold_conservation({4, 16, 64}, seed + 8));
  out.push_back(mle_hypercube_consistency(16, seed + 9));
  return out;
}

}  // namespace flexproofs::checks
