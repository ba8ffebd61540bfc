#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/params_io.hpp"

using namespace flexproofs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("flexproofs-test-" + std::to_string(Rng(std::random_device{}()).next()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr) {
  std::ostringstream o, e;
  const int rc = cli::run(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return rc;
}

}  // namespace

TEST_CASE("params round-trip through the file format") {
  const VcParams pp = vc_setup_seeded(16, 2, 1);
  const Bytes b = save_params(pp);
  const VcParams back = load_params(b);
  CHECK(back.N == 16);
  CHECK(back.mu == 4);
  CHECK(back.nu == 4);
  CHECK(back.batch == 2);
  CHECK(back.fc.v == pp.fc.v);
  CHECK(back.pc.srs() == pp.pc.srs());
  CHECK_FALSE(back.fc.trapdoor.has_value());
  CHECK(save_params(back) == b);

  Bytes bad = b;
  bad[0] ^= 1;
  try {
    load_params(bad);
    FAIL("corrupted magic was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_format);
  }
  bad = b;
  bad.resize(b.size() - 1);
  CHECK_THROWS_AS(load_params(bad), Error);
}

TEST_CASE("setup command") {
  TempDir dir;
  std::string out, err;
  REQUIRE(run({"setup", "--big-n", "16", "--batch", "2", "--seed", "5", "--out", dir / "a.pp"},
              &out, &err) == 0);
  CHECK(err.find("warning") != std::string::npos);
  REQUIRE(run({"setup", "--big-n", "16", "--batch", "2", "--seed", "5", "--out", dir / "b.pp"}) == 0);
  CHECK(read_file(dir / "a.pp") == read_file(dir / "b.pp"));
  const Bytes raw = read_file(dir / "a.pp");
  CHECK(save_params(load_params(raw)) == raw);

  REQUIRE(run({"setup", "--big-n", "16", "--batch", "2", "--out", dir / "c.pp"}, &out, &err) == 0);
  CHECK(err.find("warning") == std::string::npos);

  CHECK(run({"setup", "--big-n", "12", "--batch", "2", "--out", dir / "d.pp"}) == 2);
  CHECK_FALSE(fs::exists(dir / "d.pp"));

  Bytes corrupt = raw;
  corrupt[3] ^= 0xff;
  write_file(dir / "bad.pp", corrupt);
  CHECK(run({"commit", "--params", dir / "bad.pp", "--out", dir / "c.bin"}, &out, &err) == 2);
  CHECK(err.find("error: bad format") != std::string::npos);
}

TEST_CASE("commit, open and verify through the command line") {
  TempDir dir;
  {
    std::ofstream f(dir / "m.txt");
    for (int i = 0; i < 16; ++i) f << (100 + i * 7) << "\n";
  }
  REQUIRE(run({"setup", "--big-n", "16", "--batch", "2", "--seed", "9", "--out", dir / "p"}) == 0);
  REQUIRE(run({"commit", "--params", dir / "p", "--input", dir / "m.txt", "--out", dir / "c"}) == 0);
  REQUIRE(run({"open", "--params", dir / "p", "--input", dir / "m.txt", "--index", "6", "--out",
               dir / "o"}) == 0);
  std::string out;
  CHECK(run({"verify", "--params", dir / "p", "--commitment", dir / "c", "--index", "6", "--value",
             "142", "--opening", dir / "o"},
            &out) == 0);
  CHECK(out == "accept\n");
  CHECK(run({"verify", "--params", dir / "p", "--commitment", dir / "c", "--index", "6", "--value",
             "143", "--opening", dir / "o"},
            &out) == 1);
  CHECK(out == "reject\n");
  CHECK(run({"verify", "--params", dir / "p", "--commitment", dir / "c", "--index", "7", "--value",
             "142", "--opening", dir / "o"}) == 1);

  REQUIRE(run({"open-all", "--params", dir / "p", "--input", dir / "m.txt", "--out", dir / "all1"}) == 0);
  REQUIRE(run({"open-all", "--params", dir / "p", "--input", dir / "m.txt", "--out", dir / "all2",
               "--threads", "4"}) == 0);
  CHECK(read_file(dir / "all1") == read_file(dir / "all2"));

  REQUIRE(run({"prove-eval", "--params", dir / "p", "--input", dir / "m.txt", "--point", "0,1,1,0",
               "--out", dir / "e"},
              &out) == 0);
  CHECK(out == "y = 142\n");
  CHECK(run({"verify-eval", "--params", dir / "p", "--commitment", dir / "c", "--point", "0,1,1,0",
             "--proof", dir / "e"}) == 0);
  CHECK(run({"verify-eval", "--params", dir / "p", "--commitment", dir / "c", "--point", "0,1,1,0",
             "--proof", dir / "e", "--value", "141"}) == 1);
}

TEST_CASE("reports carry the environment") {
  const auto report = cli::bench_vc({{16}, {}, 1, 3});
  CHECK(report.at("env").at("s1") == 32);
  CHECK(report.at("env").at("sT") == 384);
  CHECK(report.at("rows").size() == 2);
  CHECK(report.at("reference").at("label") == "published, not measured");
  CHECK(report.at("counters").size() == 4);
  const auto fc = cli::bench_fc({{256}, {1, 3}, 1, 3});
  CHECK(fc.at("rows")[0].at("proof_bytes") == 6816);
  CHECK(fc.at("rows")[1].at("proof_bytes") == 6816);
  CHECK_FALSE(cli::format_table(fc).empty());
}
