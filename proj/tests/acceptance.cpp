// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero
// when a criterion fails that is not listed with --known-red.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "cli.hpp"
#include "flexproofs/algebra.hpp"
#include "flexproofs/fc.hpp"

using namespace flexproofs;
using nlohmann::json;

namespace {

struct Line {
  std::string id;
  std::string title;
  bool passed;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

Line fc_sizes() {
  const json r = cli::bench_fc({{256, 4096}, {1, 32}, 1, 11});
  bool ok = true;
  std::ostringstream d;
  for (const auto& row : r.at("rows")) {
    const std::size_t n = row.at("n");
    const std::size_t got = row.at("proof_bytes");
    const std::size_t want = n == 256 ? 6816 : 10144;
    ok = ok && got == want;
    d << "n=" << n << " t=" << row.at("t").get<std::size_t>() << ": " << got << " B; ";
  }
  return {"fc_size", "FC proof size exact", ok, d.str()};
}

std::pair<Line, Line> fc_amortization() {
  const json r = cli::bench_fc({{4096}, {1, 32}, 2, 12});
  const json& one = r.at("rows")[0];
  const json& many = r.at("rows")[1];
  const double open_ratio = many.at("bopen_s").get<double>() / (32 * one.at("bopen_s").get<double>());
  const double ver_ratio =
      many.at("bverify_s").get<double>() / (32 * one.at("bverify_s").get<double>());
  Line open{"fc_bopen_amortization", "bopen(t=32) <= 0.10 * 32 * bopen(t=1) at n=2^12",
            open_ratio <= 0.10,
            "t=1 " + fmt(one.at("bopen_s")) + " s, t=32 " + fmt(many.at("bopen_s")) +
                " s, ratio " + fmt(open_ratio)};
  Line ver{"fc_bverify_amortization", "bverify(t=32) <= 0.35 * 32 * bverify(t=1) at n=2^12",
           ver_ratio <= 0.35,
           "t=1 " + fmt(one.at("bverify_s")) + " s, t=32 " + fmt(many.at("bverify_s")) +
               " s, ratio " + fmt(ver_ratio)};
  return {open, ver};
}

Line open_all_tradeoff() {
  const std::size_t big_n = 4096;
  const unsigned log_n = log2_exact(big_n);
  const std::vector<std::size_t> batches{log_n, 2 * log_n, log_n * log_n};
  const json r = cli::bench_vc({{big_n}, batches, 3, 13});
  const json& rows = r.at("rows");
  std::vector<double> time(3), ops(3), b(3);
  for (std::size_t k = 0; k < 3; ++k) {
    time[k] = rows[k].at("open_all_s");
    b[k] = rows[k].at("b");
  }
  for (const auto& c : r.at("counters")) {
    if (c.at("phase") == "open_all") ops[c.at("row").get<std::size_t>()] = c.at("crypto_ops");
  }
  const double speedup = time[1] / time[2];

  // Least squares for ops = c1 * N / b + c2 * sqrt(N) log N.
  const double x2 = std::sqrt(double(big_n)) * log_n;
  double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double x1 = big_n / b[k];
    s11 += x1 * x1;
    s12 += x1 * x2;
    s22 += x2 * x2;
    t1 += x1 * ops[k];
    t2 += x2 * ops[k];
  }
  const double det = s11 * s22 - s12 * s12;
  const double c1 = (t1 * s22 - t2 * s12) / det;
  const double c2 = (s11 * t2 - s12 * t1) / det;
  double worst = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double fit = c1 * big_n / b[k] + c2 * x2;
    worst = std::max(worst, std::abs(fit - ops[k]) / ops[k]);
  }
  std::ostringstream d;
  d << "b(requested->used) ";
  for (std::size_t k = 0; k < 3; ++k) {
    d << batches[k] << "->" << b[k] << " " << fmt(time[k]) << " s " << ops[k] << " ops; ";
  }
  d << "speedup 2logN/log^2N " << fmt(speedup) << "x; fit c1=" << fmt(c1) << " c2=" << fmt(c2)
    << " worst residual " << fmt(100 * worst) << "%";
  return {"open_all_tradeoff", "OpenAll log^2 N >= 3x faster than 2 log N, counters fit within 25%",
          speedup >= 3.0 && worst <= 0.25, d.str()};
}

Line correctness() {
  std::vector<checks::CheckResult> parts;
  parts.push_back(checks::fc_correctness({1, 2, 4, 8, 16},
                                         {1, 2, 3, 4, 5}, 50, 21));
  parts.push_back(checks::vc_correctness({4, 16, 64, 256}, 1, 22));
  parts.push_back(checks::hyper_eval_equivalence(6, 23));
  parts.push_back(checks::unit_fast_path(64, 24));
  parts.push_back(checks::decomposition_identity(256, 50, 25));
  for (auto& f : checks::tamper_fuzz(100, 26)) parts.push_back(std::move(f));
  bool ok = true;
  std::ostringstream d;
  for (const auto& p : parts) {
    ok = ok && p.passed;
    d << p.name << (p.passed ? " ok" : " FAILED (" + p.detail + ")") << "; ";
  }
  return {"correctness", "Correctness suites (a)-(f)", ok, d.str()};
}

Line determinism() {
  const auto r = checks::open_all_determinism(256, 16, 1, 8, 27);
  return {"fs_determinism", "OpenAll byte-identical across runs and threads 1 vs 8", r.passed,
          r.detail};
}

Line perturbation() {
  const auto r = checks::batch_perturbation(1000, 28);
  return {"batch_perturbation", "Perturbed batch value rejected in 1000 of 1000 trials", r.passed,
          r.detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<std::string> known_red;
  app.add_option("--known-red", known_red, "Criterion ids whose failure is documented");
  std::vector<std::string> only;
  app.add_option("--only", only, "Run only these criterion ids");
  CLI11_PARSE(app, argc, argv);

  BilinearCtx::get();
  const std::set<std::string> red(known_red.begin(), known_red.end());
  const std::set<std::string> selected(only.begin(), only.end());
  auto wanted = [&](const std::string& id) { return selected.empty() || selected.count(id); };

  int unexpected = 0;
  auto report = [&](const Line& l) {
    std::printf("[PRIMARY] %s %s: %s (%s)\n", l.passed ? "PASS" : "FAIL", l.id.c_str(),
                l.title.c_str(), l.detail.c_str());
    std::fflush(stdout);
    if (!l.passed && !red.count(l.id)) ++unexpected;
  };

  if (wanted("fc_size")) report(fc_sizes());
  if (wanted("fc_bopen_amortization") || wanted("fc_bverify_amortization")) {
    const auto [open, ver] = fc_amortization();
    if (wanted(open.id)) report(open);
    if (wanted(ver.id)) report(ver);
  }
  if (wanted("open_all_tradeoff")) report(open_all_tradeoff());
  if (wanted("correctness")) report(correctness());
  if (wanted("fs_determinism")) report(determinism());
  if (wanted("batch_perturbation")) report(perturbation());
  if (unexpected > 0) std::printf("%d criterion(s) failed unexpectedly\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
