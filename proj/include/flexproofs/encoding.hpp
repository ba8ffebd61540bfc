#pragma once

// Canonical byte encodings. Scalars are 32-byte big-endian; G1/G2 use mcl's
// compressed form (32 / 64 bytes); GT is the full Fp12 element (384 bytes).
// These bytes feed the transcripts, so they are part of the wire contract.

#include <cstdint>
#include <span>
#include <string>

#include "flexproofs/algebra.hpp"

namespace flexproofs {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(std::span<const std::uint8_t> bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }
  void scalar(const Fr& x);
  void g1(const G1& p);
  void g2(const G2& p);
  void gt(const GT& x);

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

/// Reads canonical encodings; throws Error(Errc::malformed) on short or
/// non-canonical input.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::span<const std::uint8_t> raw(std::size_t n);
  Fr scalar();
  G1 g1();
  G2 g2();
  GT gt();

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  void expect_done() const;

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

void encode_scalar(const Fr& x, std::uint8_t out[32]);

Bytes to_bytes(const Fr& x);
Bytes to_bytes(const G1& p);
Bytes to_bytes(const G2& p);
Bytes to_bytes(const GT& x);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace flexproofs
