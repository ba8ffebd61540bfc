#pragma once

// Command layer of the flexproofs CLI, kept in a library so tests can drive
// it in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace flexproofs::cli {

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FcBenchConfig {
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ts;
  int reps = 3;
  std::uint64_t seed = 1;
};

struct VcBenchConfig {
  std::vector<std::size_t> big_ns;
  /// Empty means {2 log N, log^2 N} for each N.
  std::vector<std::size_t> batches;
  int reps = 3;
  std::uint64_t seed = 1;
};

nlohmann::json bench_fc(const FcBenchConfig& cfg);
nlohmann::json bench_vc(const VcBenchConfig& cfg);
nlohmann::json selftest_report(std::uint64_t seed, bool mutate_fold);

/// git revision, curve id and serialization widths, thread count.
nlohmann::json environment();

/// Renders rows as an aligned text table.
std::string format_table(const nlohmann::json& report);

}  // namespace flexproofs::cli
