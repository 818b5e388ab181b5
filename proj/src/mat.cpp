#include "gl2cc/mat.hpp"

#include <stdexcept>

namespace gl2cc {

Mat mat_identity(const Field& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }

Mat diag(const Field& F, FElem d1, FElem d2) {
  if (d1 == F.zero() || d2 == F.zero())
    throw std::invalid_argument("diag: entries must be invertible");
  return {d1, F.zero(), F.zero(), d2};
}

Mat swap_mat(const Field& F) { return {F.zero(), F.one(), F.one(), F.zero()}; }

FElem det(const Field& F, const Mat& m) {
  return F.sub(F.mul(m.e11, m.e22), F.mul(m.e12, m.e21));
}

Mat mul(const Field& F, const Mat& a, const Mat& b) {
  return {F.add(F.mul(a.e11, b.e11), F.mul(a.e12, b.e21)),
          F.add(F.mul(a.e11, b.e12), F.mul(a.e12, b.e22)),
          F.add(F.mul(a.e21, b.e11), F.mul(a.e22, b.e21)),
          F.add(F.mul(a.e21, b.e12), F.mul(a.e22, b.e22))};
}

Mat inverse(const Field& F, const Mat& m) {
  FElem d = det(F, m);
  if (d == F.zero()) throw std::invalid_argument("inverse: matrix is singular");
  FElem di = F.inv(d);
  return {F.mul(di, m.e22), F.mul(di, F.neg(m.e12)),
          F.mul(di, F.neg(m.e21)), F.mul(di, m.e11)};
}

Mat conjugate(const Field& F, const Mat& g, const Mat& x) {
  return mul(F, mul(F, g, x), inverse(F, g));
}

Mat mat_pow(const Field& F, Mat m, i64 e) {
  if (e < 0) { m = inverse(F, m); e = -e; }
  Mat r = mat_identity(F);
  while (e > 0) {
    if (e & 1) r = mul(F, r, m);
    m = mul(F, m, m);
    e >>= 1;
  }
  return r;
}

bool is_scalar(const Mat& m) {
  return m.e11 == m.e22 && m.e12.v == 0 && m.e21.v == 0;
}

i64 mat_order(const Field& F, const Mat& m) {
  if (det(F, m) == F.zero()) throw std::invalid_argument("mat_order: matrix is singular");
  Mat id = mat_identity(F);
  Mat x = m;
  i64 cap = F.q() * (F.q() * F.q() - 1);  // element orders in GL(2,q) divide this
  for (i64 n = 1; n <= cap; ++n) {
    if (x == id) return n;
    x = mul(F, x, m);
  }
  throw std::logic_error("mat_order: cap exceeded");
}

std::uint64_t mat_code(const Field& F, const Mat& m) {
  std::uint64_t q = (std::uint64_t)F.q();
  return ((((std::uint64_t)m.e11.v * q + m.e12.v) * q + m.e21.v) * q + m.e22.v);
}

Mat mat_from_code(const Field& F, std::uint64_t code) {
  std::uint64_t q = (std::uint64_t)F.q();
  FElem e22 = F.from_packed((i64)(code % q)); code /= q;
  FElem e21 = F.from_packed((i64)(code % q)); code /= q;
  FElem e12 = F.from_packed((i64)(code % q)); code /= q;
  FElem e11 = F.from_packed((i64)(code % q));
  return {e11, e12, e21, e22};
}

}  // namespace gl2cc
