#ifndef GL2CC_FIELD_HPP_
#define GL2CC_FIELD_HPP_

#include <cstdint>
#include <vector>

#include "gl2cc/numeric.hpp"

namespace gl2cc {

// Element of GF(p^k), packed as sum coeff[i] * p^i with coeff[i] in [0, p).
// Comparing packed values is the same as comparing coefficient tuples from
// highest degree down, so the natural integer order is the canonical order.
// fid identifies the owning field; every Field operation checks it.
struct FElem {
  std::int32_t v = 0;
  std::int32_t fid = 0;
  friend bool operator==(const FElem&, const FElem&) = default;
  friend bool operator<(FElem a, FElem b) { return a.v < b.v; }
};

// GF(q), q = p^k <= 2^20. The modulus is the monic irreducible degree-k
// polynomial over GF(p) with the smallest coefficient tuple, so construction
// is deterministic: equal (p, k) always give the identical field.
// Immutable after construction and safe to share between threads.
class Field {
 public:
  Field(i64 p, int k);

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 q() const { return q_; }
  std::int32_t id() const { return fid_; }
  // k+1 coefficients, constant term first, leading coefficient 1
  const std::vector<i64>& modulus() const { return modulus_; }

  FElem zero() const { return {0, fid_}; }
  FElem one() const { return {1, fid_}; }
  FElem from_packed(i64 v) const;
  FElem from_coeffs(const std::vector<i64>& coeffs) const;
  std::vector<i64> coeffs(FElem x) const;  // length k, x^0 first

  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem neg(FElem a) const;
  FElem mul(FElem a, FElem b) const;
  FElem inv(FElem a) const;            // throws on zero
  FElem pow(FElem a, i64 e) const;     // negative e goes through the inverse

  i64 order(FElem a) const;            // least n >= 1 with a^n = 1
  // the canonical generator of the unique subgroup of order n in GF(q)^*:
  // g^((q-1)/n) for the smallest primitive element g
  FElem element_of_order(i64 n) const;
  FElem primitive_element() const { return {(std::int32_t)primitive_, fid_}; }

  const std::vector<std::pair<i64, int>>& unit_factorization() const { return q1_factors_; }

 private:
  i64 p_;
  int k_;
  i64 q_;
  std::int32_t fid_;
  std::vector<i64> modulus_;
  std::vector<std::pair<i64, int>> q1_factors_;
  i64 primitive_ = 1;
  // packed multiplication / inverse tables, built for small q only
  std::vector<std::int32_t> mul_table_, inv_table_;

  void check(FElem x) const;
  i64 add_raw(i64 a, i64 b) const;
  i64 neg_raw(i64 a) const;
  i64 mul_raw(i64 a, i64 b) const;
  i64 pow_raw(i64 a, i64 e) const;
  i64 order_raw(i64 a) const;
};

}  // namespace gl2cc

#endif
