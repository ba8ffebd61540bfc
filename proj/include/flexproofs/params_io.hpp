#pragma once

// On-disk parameter format:
//   "FLEXPP01" || curve id (u8) || N, mu, nu, b (u64 each)
//   || FC: n (u64) || v[0..n) || v_odd[0..n-1) || g1^beta
//   || PC: k (u8) || full Lagrange SRS (2^k G1) || g2^{s_a} (k G2)
// Integers are big-endian; group elements use the canonical encodings.
// Trapdoors are never written.

#include <filesystem>
#include <span>

#include "flexproofs/vc.hpp"

namespace flexproofs {

inline constexpr char kParamsMagic[8] = {'F', 'L', 'E', 'X', 'P', 'P', '0', '1'};

Bytes save_params(const VcParams& pp);
/// Throws Error(Errc::bad_format) on a wrong magic or curve, and
/// Error(Errc::malformed) on inconsistent contents.
VcParams load_params(std::span<const std::uint8_t> data);

/// Writes through a temporary file and a rename.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data);
Bytes read_file(const std::filesystem::path& path);

}  // namespace flexproofs
