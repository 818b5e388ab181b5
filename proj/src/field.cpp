#include "gl2cc/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gl2cc {

namespace {

constexpr i64 kMaxQ = i64(1) << 20;
constexpr i64 kTableQ = 64;  // precompute mul/inv tables up to this size

// polynomials over GF(p): coefficient vectors, constant term first
using Poly = std::vector<i64>;

int degree(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// remainder of f by monic g
Poly poly_rem(Poly f, const Poly& g, i64 p) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    i64 c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      i64 t = (f[i - dg + j] - c * g[j]) % p;
      f[i - dg + j] = t < 0 ? t + p : t;
    }
  }
  f.resize(dg);
  return f;
}

bool poly_is_zero(const Poly& f) { return degree(f) < 0; }

Poly unpack_poly(i64 v, i64 p, int len) {
  Poly f(len);
  for (int i = 0; i < len; ++i) { f[i] = v % p; v /= p; }
  return f;
}

// monic degree-k polynomial x^k + (packed lower coefficients)
Poly monic_from_packed(i64 packed, i64 p, int k) {
  Poly f = unpack_poly(packed, p, k + 1);
  f[k] = 1;
  return f;
}

bool is_irreducible(const Poly& f, i64 p, int k) {
  // trial division by every monic divisor of degree up to k/2
  for (int d = 1; 2 * d <= k; ++d) {
    for (i64 packed = 0; packed < ipow(p, d); ++packed) {
      Poly g = monic_from_packed(packed, p, d);
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(i64 p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("Field: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("Field: k must be at least 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kMaxQ) throw std::invalid_argument("Field: q exceeds 2^20");
  }
  fid_ = (std::int32_t)(p * 64 + k);

  // smallest monic irreducible of degree k; for k = 1 this is just x
  i64 found = -1;
  for (i64 packed = 0; packed < q_; ++packed) {
    if (is_irreducible(monic_from_packed(packed, p_, k_), p_, k_)) { found = packed; break; }
  }
  if (found < 0) throw std::logic_error("Field: no irreducible polynomial found");
  modulus_ = monic_from_packed(found, p_, k_);

  q1_factors_ = factorize(q_ - 1);

  if (q_ <= kTableQ) {
    mul_table_.assign((size_t)(q_ * q_), 0);
    for (i64 a = 0; a < q_; ++a)
      for (i64 b = a; b < q_; ++b) {
        i64 r = mul_raw(a, b);
        mul_table_[(size_t)(a * q_ + b)] = (std::int32_t)r;
        mul_table_[(size_t)(b * q_ + a)] = (std::int32_t)r;
      }
    inv_table_.assign((size_t)q_, 0);
    for (i64 a = 1; a < q_; ++a)
      inv_table_[(size_t)a] = (std::int32_t)pow_raw(a, q_ - 2);
  }

  for (i64 v = 1; v < q_; ++v)
    if (order_raw(v) == q_ - 1) { primitive_ = v; break; }
}

void Field::check(FElem x) const {
  if (x.fid != fid_)
    throw std::invalid_argument("Field: element belongs to a different field");
}

FElem Field::from_packed(i64 v) const {
  if (v < 0 || v >= q_) throw std::invalid_argument("Field: packed value out of range");
  return {(std::int32_t)v, fid_};
}

FElem Field::from_coeffs(const std::vector<i64>& coeffs) const {
  if ((int)coeffs.size() != k_) throw std::invalid_argument("Field: expected k coefficients");
  i64 v = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= p_) throw std::invalid_argument("Field: coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return {(std::int32_t)v, fid_};
}

std::vector<i64> Field::coeffs(FElem x) const {
  check(x);
  std::vector<i64> c(k_);
  i64 v = x.v;
  for (int i = 0; i < k_; ++i) { c[i] = v % p_; v /= p_; }
  return c;
}

i64 Field::add_raw(i64 a, i64 b) const {
  if (k_ == 1) return (a + b) % p_;
  i64 r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * w;
    a /= p_; b /= p_; w *= p_;
  }
  return r;
}

i64 Field::neg_raw(i64 a) const {
  if (k_ == 1) return (p_ - a) % p_;
  i64 r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * w;
    a /= p_; w *= p_;
  }
  return r;
}

i64 Field::mul_raw(i64 a, i64 b) const {
  if (k_ == 1) return (a * b) % p_;
  std::array<i64, 64> prod{};
  std::array<i64, 32> da{}, db{};
  for (int i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; }
  for (int i = 0; i < k_; ++i) { db[i] = b % p_; b /= p_; }
  for (int i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] += da[i] * db[j];
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    i64 c = prod[i] % p_;
    if (c == 0) continue;
    // x^i = x^(i-k) * (x^k mod modulus)
    for (int j = 0; j < k_; ++j) prod[i - k_ + j] += c * (p_ - modulus_[j]);
  }
  i64 r = 0, w = 1;
  for (int i = 0; i < k_; ++i) { r += (prod[i] % p_) * w; w *= p_; }
  return r;
}

i64 Field::pow_raw(i64 a, i64 e) const {
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul_raw(r, a);
    a = mul_raw(a, a);
    e >>= 1;
  }
  return r;
}

i64 Field::order_raw(i64 a) const {
  if (a == 0) throw std::invalid_argument("Field: zero has no multiplicative order");
  i64 o = q_ - 1;
  for (auto [f, e] : q1_factors_) {
    (void)e;
    while (o % f == 0 && pow_raw(a, o / f) == 1) o /= f;
  }
  return o;
}

FElem Field::add(FElem a, FElem b) const { check(a); check(b); return {(std::int32_t)add_raw(a.v, b.v), fid_}; }
FElem Field::sub(FElem a, FElem b) const { check(a); check(b); return {(std::int32_t)add_raw(a.v, neg_raw(b.v)), fid_}; }
FElem Field::neg(FElem a) const { check(a); return {(std::int32_t)neg_raw(a.v), fid_}; }

FElem Field::mul(FElem a, FElem b) const {
  check(a); check(b);
  if (!mul_table_.empty()) return {mul_table_[(size_t)(a.v * q_ + b.v)], fid_};
  return {(std::int32_t)mul_raw(a.v, b.v), fid_};
}

FElem Field::inv(FElem a) const {
  check(a);
  if (a.v == 0) throw std::invalid_argument("Field: division by zero");
  if (!inv_table_.empty()) return {inv_table_[(size_t)a.v], fid_};
  return {(std::int32_t)pow_raw(a.v, q_ - 2), fid_};
}

FElem Field::pow(FElem a, i64 e) const {
  check(a);
  if (e < 0) { a = inv(a); e = -e; }
  FElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

i64 Field::order(FElem a) const { check(a); return order_raw(a.v); }

FElem Field::element_of_order(i64 n) const {
  if (n < 1 || (q_ - 1) % n != 0)
    throw std::invalid_argument("Field: no element of order " + std::to_string(n) +
                                " (it must divide q-1)");
  if (q_ == 2 || n == 1) return one();
  return pow(primitive_element(), (q_ - 1) / n);
}

}  // namespace gl2cc
