#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "checks.hpp"
#include "flexproofs/counters.hpp"
#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/fc.hpp"
#include "flexproofs/hooks.hpp"
#include "flexproofs/parallel.hpp"
#include "flexproofs/params_io.hpp"
#include "flexproofs/snark_bridge.hpp"
#include "flexproofs/vc.hpp"

#ifndef FLEXPROOFS_GIT_REV
#define FLEXPROOFS_GIT_REV "unknown"
#endif

namespace flexproofs::cli {

using nlohmann::json;

namespace {

constexpr const char* kSeededWarning =
    "warning: parameters were derived from --seed. Anyone who knows the seed can recover the "
    "trapdoor and forge openings. Use seeded parameters for tests and benchmarks only.";

using Clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double average_seconds(int reps, F&& f) {
  f();
  double total = 0;
  for (int r = 0; r < reps; ++r) total += seconds(f);
  return total / reps;
}

json counts_json(const OpCounts& c) {
  return {{"pairings", c.pairings},   {"g1_exps", c.g1_exps},     {"g2_exps", c.g2_exps},
          {"gt_exps", c.gt_exps},     {"field_ops", c.field_ops}, {"crypto_ops", c.crypto_ops()}};
}

template <class F>
OpCounts count_ops(F&& f) {
  counters::Scope scope;
  f();
  return scope.counts();
}

Fr parse_scalar(const std::string& s) {
  Fr x;
  bool ok = false;
  BilinearCtx::get();
  x.setStr(&ok, s.c_str(), 10);
  require(ok, Errc::invalid_argument, "not a decimal scalar below the field order");
  return x;
}

ScalarVec parse_point(const std::string& s) {
  ScalarVec out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

ScalarVec read_vector(const std::string& path, std::uint64_t seed, std::size_t n) {
  if (path.empty()) return Rng(seed).scalars(n);
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::io, "cannot open input vector");
  ScalarVec out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(parse_scalar(line.substr(b, e - b + 1)));
  }
  require(out.size() == n, Errc::length_mismatch, "input vector length must equal N");
  return out;
}

VcParams read_params(const std::string& path) { return load_params(read_file(path)); }

VcCommitment read_commitment(const std::string& path) {
  const Bytes b = read_file(path);
  ByteReader rd(b);
  VcCommitment c{FcCommitment{rd.gt()}};
  rd.expect_done();
  return c;
}

Bytes encode_openings(const std::vector<VcOpening>& ops) {
  ByteWriter w;
  w.u64(ops.size());
  for (const auto& op : ops) {
    const Bytes b = op.to_bytes();
    w.u32(static_cast<std::uint32_t>(b.size()));
    w.raw(b);
  }
  return w.take();
}

void emit_report(const json& report, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  const std::string text = format == "table" ? format_table(report) : report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, Bytes(text.begin(), text.end()));
  }
}

json published_reference() {
  // Desk-scale runs cannot reach these sizes; echoed as static metadata.
  const std::size_t ns[] = {1u << 16, 1u << 18, 1u << 20, 1u << 22, 1u << 24};
  const double commit[] = {0.82, 3.01, 8.66, 31.71, 116.64};
  const double open_all[] = {1.42, 4.82, 17.15, 58.66, 210.07};
  const double verify[] = {0.01, 0.011, 0.012, 0.013, 0.014};
  const double size_kib[] = {5.53, 6.63, 7.81, 9.09, 10.47};
  json rows = json::array();
  for (int i = 0; i < 5; ++i) {
    rows.push_back({{"N", ns[i]},
                    {"commit_s", commit[i]},
                    {"open_all_s", open_all[i]},
                    {"verify_s", verify[i]},
                    {"proof_kib", size_kib[i]}});
  }
  return {{"scheme", "HydraProofs"}, {"label", "published, not measured"}, {"rows", rows}};
}

}  // namespace

json environment() {
  const auto& ctx = BilinearCtx::get();
  return {{"git_rev", FLEXPROOFS_GIT_REV},
          {"curve", std::string(ctx.curve_name())},
          {"curve_id", ctx.curve_id()},
          {"s1", ctx.s1()},
          {"s2", ctx.s2()},
          {"sT", ctx.sT()},
          {"scalar_bytes", BilinearCtx::kScalarBytes},
          {"threads", num_threads()},
          {"compiler", __VERSION__}};
}

json bench_fc(const FcBenchConfig& cfg) {
  json rows = json::array();
  json counts = json::array();
  for (std::size_t n : cfg.ns) {
    Rng rng(cfg.seed ^ (n * 0x9e3779b97f4a7c15ULL));
    const FcParams pp = fc_setup_with_trapdoor(n, rng.scalar());
    const G1Vec a = rng.g1s(n);
    FcCommitment c;
    const double commit_s = average_seconds(cfg.reps, [&] { c = fc_commit(pp, a); });
    for (std::size_t t : cfg.ts) {
      std::vector<ScalarVec> bs(t);
      for (auto& b : bs) b = rng.scalars(n);
      G1Vec ys;
      for (const auto& b : bs) ys.push_back(multi_exp(a, b));
      FcBatchProof proof;
      const double bopen_s = average_seconds(cfg.reps, [&] { proof = fc_bopen(pp, c, a, bs, ys); });
      bool ok = false;
      const double bverify_s =
          average_seconds(cfg.reps, [&] { ok = fc_bverify(pp, c, bs, ys, proof); });
      require(ok, Errc::invalid_argument, "benchmark proof failed to verify");
      const OpCounts open_ops = count_ops([&] { fc_bopen(pp, c, a, bs, ys); });
      const OpCounts verify_ops = count_ops([&] { fc_bverify(pp, c, bs, ys, proof); });
      const std::size_t row = rows.size();
      rows.push_back({{"n", n},
                      {"t", t},
                      {"proof_bytes", proof.to_bytes().size()},
                      {"wire_bytes", proof.to_wire().size()},
                      {"commit_s", commit_s},
                      {"bopen_s", bopen_s},
                      {"bverify_s", bverify_s}});
      json o = counts_json(open_ops);
      o["row"] = row;
      o["phase"] = "bopen";
      counts.push_back(o);
      json v = counts_json(verify_ops);
      v["row"] = row;
      v["phase"] = "bverify";
      counts.push_back(v);
    }
  }
  json config = {{"command", "bench-fc"}, {"n", cfg.ns},       {"t", cfg.ts},
                 {"reps", cfg.reps},      {"seed", cfg.seed}, {"threads", num_threads()}};
  return {{"config", config}, {"rows", rows}, {"counters", counts}, {"env", environment()}};
}

json bench_vc(const VcBenchConfig& cfg) {
  json rows = json::array();
  json counts = json::array();
  for (std::size_t big_n : cfg.big_ns) {
    const VcParams base = vc_setup_seeded(big_n, 1, cfg.seed ^ big_n);
    const unsigned log_n = log2_exact(big_n);
    std::vector<std::size_t> batches = cfg.batches;
    if (batches.empty()) batches = {std::max(1u, 2 * log_n), std::max(1u, log_n * log_n)};
    Rng rng(cfg.seed ^ (big_n * 0x9e3779b97f4a7c15ULL));
    const ScalarVec m = rng.scalars(big_n);
    for (std::size_t requested : batches) {
      const std::size_t b = std::clamp<std::size_t>(requested, 1, base.mu);
      const VcParams pp = vc_with_batch(base, b);
      std::optional<std::pair<VcCommitment, VcAux>> committed;
      const double commit_s = average_seconds(cfg.reps, [&] { committed = vc_commit(pp, m); });
      const auto& [c, aux] = *committed;
      std::vector<VcOpening> openings;
      const double open_all_s =
          average_seconds(cfg.reps, [&] { openings = vc_open_all(pp, aux, m); });
      const OpCounts ops = count_ops([&] { vc_open_all(pp, aux, m); });

      const std::size_t i = rng.next() % big_n;
      const Bytes wire = openings[i].to_bytes();
      const int verify_reps = std::max(10, cfg.reps * 10);
      bool ok = true;
      const double verify_compute_s = average_seconds(
          verify_reps, [&] { ok = ok && vc_verify(pp, c, i, m[i], openings[i]); });
      const double verify_e2e_s = average_seconds(verify_reps, [&] {
        ok = ok && vc_verify(pp, c, i, m[i], VcOpening::from_bytes(wire));
      });
      require(ok, Errc::invalid_argument, "benchmark opening failed to verify");
      const OpCounts verify_ops = count_ops([&] { vc_verify(pp, c, i, m[i], openings[i]); });

      const std::size_t row = rows.size();
      rows.push_back({{"N", big_n},
                      {"b_requested", requested},
                      {"b", b},
                      {"mu", pp.mu},
                      {"nu", pp.nu},
                      {"blocks", pp.num_blocks()},
                      {"commit_s", commit_s},
                      {"open_all_s", open_all_s},
                      {"verify_compute_s", verify_compute_s},
                      {"verify_e2e_s", verify_e2e_s},
                      {"proof_bytes", openings[i].size_bytes()},
                      {"proof_bytes_without_block", openings[i].size_without_block()}});
      json o = counts_json(ops);
      o["row"] = row;
      o["phase"] = "open_all";
      counts.push_back(o);
      json v = counts_json(verify_ops);
      v["row"] = row;
      v["phase"] = "verify";
      counts.push_back(v);
    }
  }
  json config = {{"command", "bench-vc"}, {"big_n", cfg.big_ns}, {"batch", cfg.batches},
                 {"reps", cfg.reps},      {"seed", cfg.seed},   {"threads", num_threads()}};
  return {{"config", config},
          {"rows", rows},
          {"counters", counts},
          {"env", environment()},
          {"reference", published_reference()}};
}

json selftest_report(std::uint64_t seed, bool mutate_fold) {
  testing::HookGuard guard;
  testing::hooks().break_fold_update = mutate_fold;
  json rows = json::array();
  for (const auto& r : checks::selftest_suite(seed)) {
    rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  json config = {{"command", "selftest"}, {"seed", seed}, {"mutate_fold", mutate_fold},
                 {"threads", num_threads()}};
  return {{"config", config}, {"rows", rows}, {"counters", json::array()}, {"env", environment()}};
}

std::string format_table(const json& report) {
  std::ostringstream os;
  const json& rows = report.at("rows");
  if (rows.empty()) return "(no rows)\n";
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const json& v = row.contains(cols[c]) ? row.at(cols[c]) : json();
      std::string s;
      if (v.is_string()) {
        s = v.get<std::string>();
      } else if (v.is_number_float()) {
        std::ostringstream f;
        f << std::setprecision(4) << v.get<double>();
        s = f.str();
      } else if (v.is_boolean()) {
        s = v.get<bool>() ? "pass" : "FAIL";
      } else {
        s = v.dump();
      }
      width[c] = std::max(width[c], s.size());
      line.push_back(std::move(s));
    }
    cells.push_back(std::move(line));
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << line[c]
         << (c + 1 < line.size() ? "  " : "\n");
    }
  };
  print(cols);
  for (const auto& line : cells) print(line);
  if (report.contains("reference")) {
    const json& ref = report.at("reference");
    os << "\n" << ref.at("scheme").get<std::string>() << " ("
       << ref.at("label").get<std::string>() << ")\n";
    for (const auto& r : ref.at("rows")) os << r.dump() << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FlexProofs vector commitments: setup, proofs and benchmarks"};
  app.require_subcommand(1);

  std::size_t big_n = 0, batch = 0, index = 0;
  std::vector<std::size_t> ns, big_ns, ts, batches;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> setup_seed;
  int reps = 3, threads = 0;
  bool large = false, mutate_fold = false;
  std::string out_path, params, input, commitment, opening, value, point, proof_path;
  std::string format = "json";

  auto add_threads = [&](CLI::App* s) {
    s->add_option("--threads", threads, "Worker threads inside library calls")
        ->check(CLI::PositiveNumber);
  };
  auto add_report = [&](CLI::App* s) {
    s->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
    s->add_option("--out", out_path, "Write the report here instead of stdout");
    s->add_option("--seed", seed, "RNG seed");
    add_threads(s);
  };
  auto add_vector = [&](CLI::App* s) {
    s->add_option("--params", params, "Parameter file")->required();
    s->add_option("--input", input, "Vector file: one decimal scalar per line");
    s->add_option("--seed", seed, "Seed for a random vector when --input is absent");
    add_threads(s);
  };

  auto* setup = app.add_subcommand("setup", "Generate parameters and write them to a file");
  setup->add_option("--big-n", big_n, "Vector length N")->required();
  setup->add_option("--batch", batch, "Batch size b")->required();
  setup->add_option("--out", out_path, "Parameter file")->required();
  setup->add_option("--seed", setup_seed, "Derive trapdoors from a seed (testing only)");
  add_threads(setup);

  auto* commit = app.add_subcommand("commit", "Commit to a vector");
  add_vector(commit);
  commit->add_option("--out", out_path, "Commitment file")->required();

  auto* open_all = app.add_subcommand("open-all", "Generate every opening");
  add_vector(open_all);
  open_all->add_option("--out", out_path, "Openings file")->required();

  auto* open = app.add_subcommand("open", "Generate the opening for one index");
  add_vector(open);
  open->add_option("--index", index, "Index i")->required();
  open->add_option("--out", out_path, "Opening file")->required();

  auto* verify = app.add_subcommand("verify", "Verify an opening");
  verify->add_option("--params", params, "Parameter file")->required();
  verify->add_option("--commitment", commitment, "Commitment file")->required();
  verify->add_option("--index", index, "Index i")->required();
  verify->add_option("--value", value, "Claimed m_i (decimal)")->required();
  verify->add_option("--opening", opening, "Opening file")->required();
  add_threads(verify);

  auto* prove_eval = app.add_subcommand("prove-eval", "Prove the multilinear extension at a point");
  add_vector(prove_eval);
  prove_eval->add_option("--point", point, "Comma-separated decimal scalars, log N of them")
      ->required();
  prove_eval->add_option("--out", out_path, "Proof file")->required();

  auto* verify_eval = app.add_subcommand("verify-eval", "Verify a multilinear evaluation proof");
  verify_eval->add_option("--params", params, "Parameter file")->required();
  verify_eval->add_option("--commitment", commitment, "Commitment file")->required();
  verify_eval->add_option("--point", point, "Comma-separated decimal scalars")->required();
  verify_eval->add_option("--proof", proof_path, "Proof file")->required();
  verify_eval->add_option("--value", value, "Claimed value; defaults to the one in the proof");
  add_threads(verify_eval);

  auto* bench_fc_cmd = app.add_subcommand("bench-fc", "Benchmark the functional commitment");
  bench_fc_cmd->add_option("--n", ns, "Vector lengths")->delimiter(',');
  bench_fc_cmd->add_option("--t", ts, "Batch sizes t")->delimiter(',');
  bench_fc_cmd->add_option("--reps", reps, "Repetitions per measurement")
      ->check(CLI::PositiveNumber);
  bench_fc_cmd->add_flag("--large", large, "Use the large n-list");
  add_report(bench_fc_cmd);

  auto* bench_vc_cmd = app.add_subcommand("bench-vc", "Benchmark the vector commitment");
  bench_vc_cmd->add_option("--big-n", big_ns, "Vector lengths N")->delimiter(',');
  bench_vc_cmd->add_option("--batch", batches, "Batch sizes b (default 2 log N and log^2 N)")
      ->delimiter(',');
  bench_vc_cmd->add_option("--reps", reps, "Repetitions per measurement")
      ->check(CLI::PositiveNumber);
  bench_vc_cmd->add_flag("--large", large, "Use the large N-list (2^16 to 2^24)");
  add_report(bench_vc_cmd);

  auto* selftest = app.add_subcommand("selftest", "Run the property suite at N <= 256");
  selftest->add_flag("--mutate-fold", mutate_fold, "Break the verifier's fold update");
  add_report(selftest);

  std::vector<std::string> argv_store{"flexproofs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const int saved_threads = num_threads();
  if (threads > 0) set_num_threads(threads);
  struct Restore {
    int n;
    ~Restore() { set_num_threads(n); }
  } restore{saved_threads};

  try {
    if (*setup) {
      VcParams pp = setup_seed ? vc_setup_seeded(big_n, batch, *setup_seed) : vc_setup(big_n, batch);
      write_file(out_path, save_params(pp));
      if (setup_seed) err << kSeededWarning << "\n";
      out << "wrote parameters N=" << pp.N << " mu=" << pp.mu << " nu=" << pp.nu
          << " b=" << pp.batch << "\n";
      return 0;
    }
    if (*commit) {
      const VcParams pp = read_params(params);
      const auto [c, aux] = vc_commit(pp, read_vector(input, seed, pp.N));
      const Bytes b = to_bytes(c.fc.value);
      write_file(out_path, b);
      out << "commitment sha256 " << to_hex(sha256(b)) << "\n";
      return 0;
    }
    if (*open_all || *open) {
      const VcParams pp = read_params(params);
      const ScalarVec m = read_vector(input, seed, pp.N);
      auto [c, aux] = vc_commit(pp, m);
      if (*open_all) {
        const auto ops = vc_open_all(pp, aux, m);
        write_file(out_path, encode_openings(ops));
        out << "wrote " << ops.size() << " openings\n";
      } else {
        require(index < pp.N, Errc::out_of_range, "index out of range");
        write_file(out_path, vc_open(pp, aux, index, m).to_bytes());
        out << "wrote opening for index " << index << "\n";
      }
      return 0;
    }
    if (*verify) {
      const VcParams pp = read_params(params);
      const VcCommitment c = read_commitment(commitment);
      const bool ok =
          vc_verify(pp, c, index, parse_scalar(value), VcOpening::from_bytes(read_file(opening)));
      out << (ok ? "accept" : "reject") << "\n";
      return ok ? 0 : 1;
    }
    if (*prove_eval) {
      const VcParams pp = read_params(params);
      const ScalarVec m = read_vector(input, seed, pp.N);
      const auto [c, aux] = vc_commit(pp, m);
      const MleEvalProof proof = prove_mle_eval(pp, aux, parse_point(point));
      write_file(out_path, proof.to_bytes());
      out << "y = " << proof.y.getStr(10) << "\n";
      return 0;
    }
    if (*verify_eval) {
      const VcParams pp = read_params(params);
      const VcCommitment c = read_commitment(commitment);
      const ScalarVec r = parse_point(point);
      const MleEvalProof proof = MleEvalProof::from_bytes(read_file(proof_path));
      const bool ok = value.empty() ? verify_mle_eval(pp, c, r, proof)
                                    : verify_mle_eval(pp, c, r, parse_scalar(value), proof);
      out << (ok ? "accept" : "reject") << "\n";
      return ok ? 0 : 1;
    }
    if (*bench_fc_cmd) {
      FcBenchConfig cfg;
      cfg.ns = !ns.empty() ? ns
               : large     ? std::vector<std::size_t>{1u << 8, 1u << 10, 1u << 12, 1u << 14, 1u << 16}
                           : std::vector<std::size_t>{1u << 8, 1u << 10, 1u << 12};
      cfg.ts = ts.empty() ? std::vector<std::size_t>{1, 32} : ts;
      cfg.reps = reps;
      cfg.seed = seed;
      emit_report(bench_fc(cfg), format, out_path, out);
      return 0;
    }
    if (*bench_vc_cmd) {
      VcBenchConfig cfg;
      cfg.big_ns = !big_ns.empty() ? big_ns
                   : large ? std::vector<std::size_t>{1u << 16, 1u << 18, 1u << 20, 1u << 22, 1u << 24}
                           : std::vector<std::size_t>{1u << 10, 1u << 12, 1u << 14};
      cfg.batches = batches;
      cfg.reps = reps;
      cfg.seed = seed;
      emit_report(bench_vc(cfg), format, out_path, out);
      return 0;
    }
    if (*selftest) {
      const json report = selftest_report(seed, mutate_fold);
      emit_report(report, format, out_path, out);
      bool all = true;
      for (const auto& r : report.at("rows")) all = all && r.at("passed").get<bool>();
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace flexproofs::cli
