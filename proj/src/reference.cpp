#include "flexproofs/reference.hpp"

namespace flexproofs::reference {

namespace {

template <class G>
G serial_msm(std::span<const G> bases, std::span<const Fr> exps) {
  require(bases.size() == exps.size(), Errc::length_mismatch, "multi_exp: length mismatch");
  G acc;
  acc.clear();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    G t;
    G::mul(t, bases[i], exps[i]);
    G::add(acc, acc, t);
  }
  return acc;
}

}  // namespace

G1 multi_exp_serial(std::span<const G1> bases, std::span<const Fr> exps) {
  return serial_msm(bases, exps);
}

G2 multi_exp_serial(std::span<const G2> bases, std::span<const Fr> exps) {
  return serial_msm(bases, exps);
}

GT pairing_prod_serial(std::span<const G1> a, std::span<const G2> b) {
  require(a.size() == b.size(), Errc::length_mismatch, "pairing_prod: length mismatch");
  GT acc = gt_identity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    GT e;
    mcl::bn::pairing(e, a[i], b[i]);
    GT::mul(acc, acc, e);
  }
  return acc;
}

Fr mle_eval_bruteforce(std::span<const Fr> table, std::span<const Fr> x) {
  const std::size_t k = x.size();
  require(table.size() == (std::size_t{1} << k), Errc::length_mismatch,
          "mle_eval_bruteforce: arity mismatch");
  Fr sum = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Fr term = table[i];
    // x[p] pairs with bit (k-1-p) of i.
    for (std::size_t p = 0; p < k; ++p) {
      const bool bit = (i >> (k - 1 - p)) & 1;
      Fr factor;
      if (bit) {
        factor = x[p];
      } else {
        Fr::sub(factor, Fr(1), x[p]);
      }
      term *= factor;
    }
    sum += term;
  }
  return sum;
}

}  // namespace flexproofs::reference
