#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gl2cc/mat.hpp"
#include "gl2cc/numeric.hpp"

using namespace gl2cc;

namespace {

Mat make(const Field& F, i64 a, i64 b, i64 c, i64 d) {
  return {F.from_packed(a), F.from_packed(b), F.from_packed(c), F.from_packed(d)};
}

std::vector<Mat> invertible_mats(const Field& F) {
  std::vector<Mat> out;
  for (i64 v = 0; v < F.q() * F.q() * F.q() * F.q(); ++v) {
    Mat m = mat_from_code(F, (std::uint64_t)v);
    if (!(det(F, m) == F.zero())) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("determinant and product against hand values mod 5") {
  Field F(5, 1);
  Mat m = make(F, 1, 2, 3, 4);
  CHECK(det(F, m).v == 3);  // 1*4 - 2*3 = -2

  Mat n = make(F, 2, 0, 1, 3);
  Mat mn = mul(F, m, n);
  CHECK(mn == make(F, 4, 1, 0, 2));

  Mat a = swap_mat(F);
  CHECK(mul(F, m, a) == make(F, 2, 1, 4, 3));  // right swap permutes columns
  CHECK(mul(F, a, m) == make(F, 3, 4, 1, 2));  // left swap permutes rows
}

TEST_CASE("inverse agrees with the hand-computed adjugate mod 5") {
  Field F(5, 1);
  Mat m = make(F, 1, 2, 3, 4);
  Mat mi = inverse(F, m);
  CHECK(mi == make(F, 3, 1, 4, 2));
  CHECK(mul(F, m, mi) == mat_identity(F));
  CHECK_THROWS_AS(inverse(F, make(F, 1, 2, 2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(mat_order(F, make(F, 1, 2, 2, 4)), std::invalid_argument);
}

TEST_CASE("group identities hold for every invertible pair over GF(3)") {
  Field F(3, 1);
  auto gl = invertible_mats(F);
  CHECK(gl.size() == 48);  // (9-1)(9-3)
  Mat id = mat_identity(F);
  for (const Mat& m : gl) {
    Mat mi = inverse(F, m);
    CHECK(mul(F, m, mi) == id);
    CHECK(mul(F, mi, m) == id);
  }
  for (const Mat& m : gl)
    for (const Mat& n : gl) {
      CHECK(det(F, mul(F, m, n)) == F.mul(det(F, m), det(F, n)));
      CHECK(inverse(F, mul(F, m, n)) == mul(F, inverse(F, n), inverse(F, m)));
    }
}

TEST_CASE("orders of torus, swap and transvection elements") {
  Field F(5, 1);
  CHECK(mat_order(F, mat_identity(F)) == 1);
  CHECK(mat_order(F, swap_mat(F)) == 2);
  CHECK(mat_order(F, diag(F, F.from_packed(2), F.one())) == 4);
  CHECK(mat_order(F, diag(F, F.from_packed(4), F.from_packed(4))) == 2);
  CHECK(mat_order(F, make(F, 1, 1, 0, 1)) == 5);
  CHECK(mat_order(F, make(F, 0, 1, 4, 0)) == 4);  // square is -I

  Field F9(3, 2);
  FElem g = F9.primitive_element();
  CHECK(mat_order(F9, diag(F9, g, F9.one())) == 8);
}

TEST_CASE("powers, including negative exponents") {
  Field F(5, 1);
  Mat d = diag(F, F.from_packed(2), F.one());
  CHECK(mat_pow(F, d, 0) == mat_identity(F));
  CHECK(mat_pow(F, d, 3) == diag(F, F.from_packed(3), F.one()));
  CHECK(mat_pow(F, d, -1) == diag(F, F.from_packed(3), F.one()));
  CHECK(mat_pow(F, d, -1) == inverse(F, d));
  CHECK(mat_pow(F, d, 4) == mat_identity(F));
  Mat m = make(F, 1, 2, 3, 4);
  CHECK(mat_pow(F, m, 7) == mul(F, mat_pow(F, m, 3), mat_pow(F, m, 4)));
}

TEST_CASE("conjugation by the swap exchanges diagonal entries") {
  Field F(7, 1);
  Mat a = swap_mat(F);
  for (i64 x = 1; x < 7; ++x)
    for (i64 y = 1; y < 7; ++y) {
      Mat d = diag(F, F.from_packed(x), F.from_packed(y));
      CHECK(conjugate(F, a, d) == diag(F, F.from_packed(y), F.from_packed(x)));
    }
  Mat g = make(F, 1, 2, 3, 5);
  Mat d = diag(F, F.from_packed(3), F.one());
  CHECK(det(F, conjugate(F, g, d)) == det(F, d));
  CHECK(mat_order(F, conjugate(F, g, d)) == mat_order(F, d));
}

TEST_CASE("scalar predicate counts exactly the invertible scalars") {
  Field F(5, 1);
  int scalars = 0;
  for (const Mat& m : invertible_mats(F))
    if (is_scalar(m)) ++scalars;
  CHECK(scalars == 4);
  CHECK(is_scalar(mat_identity(F)));
  CHECK(!is_scalar(swap_mat(F)));
  CHECK(!is_scalar(diag(F, F.from_packed(2), F.one())));
}

TEST_CASE("matrix codes round-trip over GF(3) and GF(4)") {
  for (auto [p, k] : {std::pair<i64, int>{3, 1}, {2, 2}}) {
    Field F(p, k);
    i64 total = F.q() * F.q() * F.q() * F.q();
    for (i64 v = 0; v < total; ++v) {
      Mat m = mat_from_code(F, (std::uint64_t)v);
      CHECK(mat_code(F, m) == (std::uint64_t)v);
    }
  }
}

TEST_CASE("diag rejects zero entries") {
  Field F(3, 1);
  CHECK_THROWS_AS(diag(F, F.zero(), F.one()), std::invalid_argument);
  CHECK_THROWS_AS(diag(F, F.one(), F.zero()), std::invalid_argument);
}
