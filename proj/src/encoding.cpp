#include "flexproofs/encoding.hpp"

#include <algorithm>

namespace flexproofs {

namespace {

constexpr int kScalarMode = mcl::IoSerialize | mcl::IoBigEndian;

template <class T>
void put(Bytes& buf, const T& x, std::size_t width, int mode = mcl::IoSerialize) {
  const std::size_t at = buf.size();
  buf.resize(at + width);
  const std::size_t n = x.serialize(buf.data() + at, width, mode);
  require(n == width, Errc::invalid_argument, "serialization width mismatch");
}

}  // namespace

void ByteWriter::u32(std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::scalar(const Fr& x) { put(buf_, x, BilinearCtx::kScalarBytes, kScalarMode); }
void ByteWriter::g1(const G1& p) { put(buf_, p, BilinearCtx::kG1Bytes); }
void ByteWriter::g2(const G2& p) { put(buf_, p, BilinearCtx::kG2Bytes); }
void ByteWriter::gt(const GT& x) { put(buf_, x, BilinearCtx::kGTBytes); }

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  if (n > remaining()) throw Error(Errc::malformed, "unexpected end of input");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint32_t ByteReader::u32() {
  auto b = raw(4);
  std::uint32_t v = 0;
  for (auto c : b) v = (v << 8) | c;
  return v;
}

std::uint64_t ByteReader::u64() {
  auto b = raw(8);
  std::uint64_t v = 0;
  for (auto c : b) v = (v << 8) | c;
  return v;
}

namespace {

template <class T>
T take(ByteReader& r, std::size_t width, int mode, const char* what) {
  auto b = r.raw(width);
  T x;
  if (x.deserialize(b.data(), b.size(), mode) != width) throw Error(Errc::malformed, what);
  return x;
}

}  // namespace

Fr ByteReader::scalar() {
  return take<Fr>(*this, BilinearCtx::kScalarBytes, kScalarMode, "non-canonical scalar");
}

G1 ByteReader::g1() {
  return take<G1>(*this, BilinearCtx::kG1Bytes, mcl::IoSerialize, "invalid G1 encoding");
}

G2 ByteReader::g2() {
  return take<G2>(*this, BilinearCtx::kG2Bytes, mcl::IoSerialize, "invalid G2 encoding");
}

GT ByteReader::gt() {
  return take<GT>(*this, BilinearCtx::kGTBytes, mcl::IoSerialize, "invalid GT encoding");
}

void ByteReader::expect_done() const {
  if (!done()) throw Error(Errc::malformed, "trailing bytes");
}

void encode_scalar(const Fr& x, std::uint8_t out[32]) {
  const std::size_t n = x.serialize(out, 32, kScalarMode);
  require(n == 32, Errc::invalid_argument, "scalar serialization failed");
}

Bytes to_bytes(const Fr& x) {
  ByteWriter w;
  w.scalar(x);
  return w.take();
}

Bytes to_bytes(const G1& p) {
  ByteWriter w;
  w.g1(p);
  return w.take();
}

Bytes to_bytes(const G2& p) {
  ByteWriter w;
  w.g2(p);
  return w.take();
}

Bytes to_bytes(const GT& x) {
  ByteWriter w;
  w.gt(x);
  return w.take();
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

}  // namespace flexproofs
