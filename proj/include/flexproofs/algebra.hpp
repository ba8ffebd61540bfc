#pragma once

// Bilinear-group context and the vector / multilinear arithmetic shared by
// every scheme in the library. Backed by mcl on the BN_SNARK1 curve.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <mcl/bn.hpp>

#include "flexproofs/error.hpp"

namespace flexproofs {

using Fr = mcl::bn::Fr;
using G1 = mcl::bn::G1;
using G2 = mcl::bn::G2;
using GT = mcl::bn::GT;

using ScalarVec = std::vector<Fr>;
using G1Vec = std::vector<G1>;
using G2Vec = std::vector<G2>;
using Bytes = std::vector<std::uint8_t>;

/// Process-wide pairing context. The first call to get() initializes mcl and
/// must happen before any field constant is built. It must not run during
/// static initialization: mcl's own tables are constructed then.
class BilinearCtx {
 public:
  static constexpr std::size_t kScalarBytes = 32;
  static constexpr std::size_t kG1Bytes = 32;
  static constexpr std::size_t kG2Bytes = 64;
  static constexpr std::size_t kGTBytes = 384;
  static constexpr std::uint8_t kCurveId = 4;  // mcl's MCL_BN_SNARK1

  static const BilinearCtx& get();

  std::string_view curve_name() const { return "BN_SNARK1"; }
  std::uint8_t curve_id() const { return kCurveId; }
  /// Scalar field order p as a decimal string.
  const std::string& order() const { return order_; }

  const G1& g1() const { return g1_; }
  const G2& g2() const { return g2_; }
  /// e(g1, g2).
  const GT& gt() const { return gt_; }

  std::size_t s1() const { return kG1Bytes; }
  std::size_t s2() const { return kG2Bytes; }
  std::size_t sT() const { return kGTBytes; }

 private:
  BilinearCtx();

  std::string order_;
  G1 g1_;
  G2 g2_;
  GT gt_;
};

// --- element helpers -------------------------------------------------------

inline G1 g1_identity() {
  G1 z;
  z.clear();
  return z;
}
inline G2 g2_identity() {
  G2 z;
  z.clear();
  return z;
}
inline GT gt_identity() {
  GT z;
  z.setOne();
  return z;
}

GT pairing(const G1& a, const G2& b);
GT gt_pow(const GT& x, const Fr& e);
Fr fr_inv(const Fr& x);

inline G1 operator*(const G1& p, const Fr& s) {
  G1 r;
  G1::mul(r, p, s);
  return r;
}
inline G2 operator*(const G2& p, const Fr& s) {
  G2 r;
  G2::mul(r, p, s);
  return r;
}

/// Deterministic generator for tests and benchmarks. Not for key material.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Fr scalar();
  Fr small_scalar(std::uint64_t bound) { return Fr(static_cast<int64_t>(engine_() % bound)); }
  G1 g1();
  ScalarVec scalars(std::size_t n);
  G1Vec g1s(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Uniform scalar from the system CSPRNG (used for setup trapdoors).
Fr random_scalar();

// --- vector kernels (OpenMP-parallel; see reference.hpp for serial oracles) --

/// prod_i A[i]^{b[i]}; identity on empty input.
G1 multi_exp(std::span<const G1> bases, std::span<const Fr> exps);
G2 multi_exp(std::span<const G2> bases, std::span<const Fr> exps);

/// Multi-exponentiation that skips zero exponents. Same result as multi_exp.
G1 sparse_multi_exp(std::span<const G1> bases, std::span<const Fr> exps);

/// prod_i e(A[i], B[i]); GT identity on empty input.
GT pairing_prod(std::span<const G1> a, std::span<const G2> b);

template <class T>
std::vector<T> hadamard(std::span<const T> a, std::span<const T> b) {
  require(a.size() == b.size(), Errc::length_mismatch, "hadamard: vectors differ in length");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) T::add(out[i], a[i], b[i]);
  return out;
}

template <class T>
std::vector<T> vec_pow(std::span<const T> a, const Fr& x) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) T::mul(out[i], a[i], x);
  return out;
}

template <class T>
std::pair<std::span<const T>, std::span<const T>> split_lr(std::span<const T> v) {
  require(v.size() % 2 == 0, Errc::invalid_argument, "split_lr: odd length");
  const std::size_t h = v.size() / 2;
  return {v.first(h), v.subspan(h)};
}

// --- multilinear polynomials -----------------------------------------------

/// Evaluation table of a multilinear polynomial over {0,1}^k.
/// Entry i holds f(Bin(i)); bit a of i is variable x_a, so the high half of
/// the table is x_{k-1} = 1.
class MultilinearPoly {
 public:
  MultilinearPoly() : table_(1, Fr(0)) {}
  explicit MultilinearPoly(ScalarVec table);

  static MultilinearPoly constant(const Fr& c, unsigned num_vars);

  unsigned num_vars() const { return num_vars_; }
  std::size_t size() const { return table_.size(); }
  const ScalarVec& table() const { return table_; }
  ScalarVec& mutable_table() { return table_; }
  const Fr& operator[](std::size_t i) const { return table_[i]; }

 private:
  ScalarVec table_;
  unsigned num_vars_ = 0;
};

/// Bit decomposition (i_{k-1}, ..., i_0): element 0 is the most significant bit.
std::vector<std::uint8_t> bin(std::uint64_t i, unsigned k);
/// bin() lifted to field elements.
ScalarVec bin_point(std::uint64_t i, unsigned k);

/// Evaluates the multilinear extension at x = (x_{k-1}, ..., x_0) in O(2^k).
Fr mle_eval(const MultilinearPoly& f, std::span<const Fr> x);

/// Restricts the top variable: returns the table of f(x_top = r, ...).
ScalarVec fix_top_variable(std::span<const Fr> table, const Fr& r);

bool is_power_of_two(std::uint64_t n);
unsigned log2_exact(std::uint64_t n);

}  // namespace flexproofs
