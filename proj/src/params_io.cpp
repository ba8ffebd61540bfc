#include "flexproofs/params_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "flexproofs/encoding.hpp"

namespace flexproofs {

Bytes save_params(const VcParams& pp) {
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kParamsMagic), sizeof(kParamsMagic)});
  w.u8(BilinearCtx::get().curve_id());
  w.u64(pp.N);
  w.u64(pp.mu);
  w.u64(pp.nu);
  w.u64(pp.batch);
  w.u64(pp.fc.n);
  for (const auto& p : pp.fc.v) w.g2(p);
  for (const auto& p : pp.fc.v_odd) w.g2(p);
  w.g1(pp.fc.g1_beta);
  w.u8(static_cast<std::uint8_t>(pp.pc.k));
  for (const auto& p : pp.pc.srs()) w.g1(p);
  for (const auto& p : pp.pc.g2_s) w.g2(p);
  return w.take();
}

VcParams load_params(std::span<const std::uint8_t> data) {
  ByteReader rd(data);
  if (data.size() < sizeof(kParamsMagic) + 1 ||
      !std::equal(std::begin(kParamsMagic), std::end(kParamsMagic), data.begin())) {
    throw Error(Errc::bad_format, "not a parameter file (bad magic)");
  }
  rd.raw(sizeof(kParamsMagic));
  if (rd.u8() != BilinearCtx::get().curve_id()) {
    throw Error(Errc::bad_format, "parameter file is for a different curve");
  }
  VcParams pp;
  pp.N = rd.u64();
  pp.mu = rd.u64();
  pp.nu = rd.u64();
  pp.batch = rd.u64();
  require(pp.N >= 1 && pp.N <= (std::uint64_t{1} << 40) && is_power_of_two(pp.N), Errc::malformed,
          "bad N");
  const auto [mu, nu] = vc_layout(pp.N);
  require(pp.mu == mu && pp.nu == nu, Errc::malformed, "layout does not match N");
  require(pp.batch >= 1 && pp.batch <= pp.mu, Errc::malformed, "bad batch size");

  FcParams& fc = pp.fc;
  fc.n = rd.u64();
  require(fc.n == pp.mu, Errc::malformed, "FC length does not match mu");
  fc.ell = log2_exact(fc.n);
  require(rd.remaining() >= (2 * fc.n - 1) * BilinearCtx::kG2Bytes, Errc::malformed,
          "truncated FC parameters");
  fc.v.resize(fc.n);
  for (auto& p : fc.v) p = rd.g2();
  fc.v_odd.resize(fc.n - 1);
  for (auto& p : fc.v_odd) p = rd.g2();
  fc.g1_beta = rd.g1();

  PcParams& pc = pp.pc;
  pc.k = rd.u8();
  require(pc.k == log2_exact(pp.nu), Errc::malformed, "PC arity does not match nu");
  pc.lagrange.resize(pc.k + 1);
  G1Vec& full = pc.lagrange[pc.k];
  full.resize(std::size_t{1} << pc.k);
  for (auto& p : full) p = rd.g1();
  for (unsigned a = pc.k; a-- > 0;) {
    const G1Vec& up = pc.lagrange[a + 1];
    const std::size_t h = up.size() / 2;
    pc.lagrange[a].resize(h);
    for (std::size_t i = 0; i < h; ++i) G1::add(pc.lagrange[a][i], up[i], up[h + i]);
  }
  pc.g2_s.resize(pc.k);
  for (auto& p : pc.g2_s) p = rd.g2();
  rd.expect_done();
  return pp;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::io, "cannot open " + tmp.string());
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!f) throw Error(Errc::io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::io, "rename failed: " + path.string());
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace flexproofs
