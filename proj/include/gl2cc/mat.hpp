#ifndef GL2CC_MAT_HPP_
#define GL2CC_MAT_HPP_

#include <cstdint>
#include <tuple>

#include "gl2cc/field.hpp"

namespace gl2cc {

// 2x2 matrix over a Field, row major. The total order compares
// (e11, e12, e21, e22) by packed value; it is used for canonical
// element ordering everywhere.
struct Mat {
  FElem e11, e12, e21, e22;
  friend bool operator==(const Mat&, const Mat&) = default;
  friend bool operator<(const Mat& a, const Mat& b) {
    return std::tie(a.e11.v, a.e12.v, a.e21.v, a.e22.v) <
           std::tie(b.e11.v, b.e12.v, b.e21.v, b.e22.v);
  }
};

Mat mat_identity(const Field& F);
// dia(d1, d2); throws if either entry is zero
Mat diag(const Field& F, FElem d1, FElem d2);
// the coordinate swap [[0,1],[1,0]]
Mat swap_mat(const Field& F);

FElem det(const Field& F, const Mat& m);
Mat mul(const Field& F, const Mat& a, const Mat& b);
Mat inverse(const Field& F, const Mat& m);  // throws if singular
// g * x * g^-1
Mat conjugate(const Field& F, const Mat& g, const Mat& x);
Mat mat_pow(const Field& F, Mat m, i64 e);
bool is_scalar(const Mat& m);

// multiplicative order by iteration; throws on singular input
i64 mat_order(const Field& F, const Mat& m);

// packed base-q code, e11 most significant; unique per matrix
std::uint64_t mat_code(const Field& F, const Mat& m);
Mat mat_from_code(const Field& F, std::uint64_t code);

}  // namespace gl2cc

#endif
