#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "gl2cc/matgroup.hpp"
#include "gl2cc/numeric.hpp"

using namespace gl2cc;

namespace {

Mat make(const Field& F, i64 a, i64 b, i64 c, i64 d) {
  return {F.from_packed(a), F.from_packed(b), F.from_packed(c), F.from_packed(d)};
}

Mat dia(const Field& F, i64 a, i64 b) {
  return diag(F, F.from_packed(a), F.from_packed(b));
}

// the q+1 distinct powers h^{i(q-1)}, times t, as a set
std::set<Mat> circle_times(const Field& F, const Mat& h, const Mat& t, i64 step) {
  std::set<Mat> out;
  Mat hstep = mat_pow(F, h, step);
  Mat x = mat_identity(F);
  for (i64 i = 0; i <= F.q(); ++i) {
    out.insert(mul(F, x, t));
    x = mul(F, x, hstep);
  }
  return out;
}

}  // namespace

TEST_CASE("closure of a reflected torus involution is the dihedral group of order 8") {
  Field F(5, 1);
  auto G = MatGroup::closure(F, {dia(F, 4, 1), swap_mat(F)});
  CHECK(G.order() == 8);
  for (i64 x : {1, 4})
    for (i64 y : {1, 4}) {
      CHECK(G.contains(dia(F, x, y)));
      CHECK(G.contains(mul(F, dia(F, x, y), swap_mat(F))));
    }
  CHECK(!G.contains(dia(F, 2, 1)));

  auto G2 = MatGroup::closure(F, {swap_mat(F), dia(F, 4, 1)});
  CHECK(G == G2);  // generator order is irrelevant
}

TEST_CASE("closure basics: empty, cyclic, unipotent, bounded") {
  Field F(5, 1);
  CHECK(MatGroup::closure(F, {}).order() == 1);
  CHECK(MatGroup::closure(F, {swap_mat(F)}).order() == 2);
  CHECK(MatGroup::closure(F, {make(F, 1, 1, 0, 1)}).order() == 5);
  CHECK(MatGroup::closure(F, {dia(F, 2, 1)}).order() == 4);

  auto capped = MatGroup::closure_bounded(F, {dia(F, 4, 1), swap_mat(F)}, 3);
  CHECK(!capped.has_value());
  auto fits = MatGroup::closure_bounded(F, {dia(F, 4, 1), swap_mat(F)}, 8);
  REQUIRE(fits.has_value());
  CHECK(fits->order() == 8);

  CHECK_THROWS_AS(MatGroup::closure(F, {make(F, 1, 2, 2, 4)}), std::invalid_argument);
}

TEST_CASE("assemble wraps an element list into the same group") {
  Field F(5, 1);
  auto G = MatGroup::closure(F, {dia(F, 2, 1)});
  auto elems = G.elements();
  std::reverse(elems.begin(), elems.end());
  auto H = MatGroup::assemble(F, {dia(F, 2, 1)}, elems);
  CHECK(G == H);
  CHECK(H.contains(dia(F, 4, 1)));
}

TEST_CASE("cycle generator has full order and the twist relations hold") {
  for (auto [p, k] : {std::pair<i64, int>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                      {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
    Field F(p, k);
    const i64 q = F.q();
    auto S = standard_subgroups(F);
    CAPTURE(q);

    CHECK(mat_order(F, S.h) == q * q - 1);
    CHECK(mul(F, S.b, S.b) == mat_identity(F));
    CHECK(!(S.b == mat_identity(F)));
    CHECK(conjugate(F, S.b, S.h) == mat_pow(F, S.h, q));
    CHECK(S.a == swap_mat(F));

    // the (q+1)-st power generates the scalars
    Mat z = mat_pow(F, S.h, q + 1);
    CHECK(is_scalar(z));
    CHECK(mat_order(F, z) == q - 1);

    CHECK(S.D.order == (q - 1) * (q - 1));
    CHECK(S.M.order == 2 * (q - 1) * (q - 1));
    CHECK(S.S.order == q * q - 1);
    CHECK(S.N.order == 2 * (q * q - 1));
  }
}

TEST_CASE("descriptor orders match their closures at small q") {
  for (auto [p, k] : {std::pair<i64, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    Field F(p, k);
    auto S = standard_subgroups(F);
    CAPTURE(F.q());
    for (const GroupDescriptor* d : {&S.D, &S.M, &S.S, &S.N})
      CHECK(MatGroup::closure(F, d->generators).order() == d->order);

    // monomial elements are diagonal or antidiagonal, nothing else
    auto M = MatGroup::closure(F, S.M.generators);
    for (const Mat& m : M.elements()) {
      bool diag_form = m.e12 == F.zero() && m.e21 == F.zero();
      bool anti_form = m.e11 == F.zero() && m.e22 == F.zero();
      CHECK(diag_form != anti_form);
    }

    // everything in the cycle normalizer twists h to h or h^q
    auto N = MatGroup::closure(F, S.N.generators);
    for (const Mat& g : N.elements()) {
      Mat c = conjugate(F, g, S.h);
      CHECK((c == S.h || c == mat_pow(F, S.h, F.q())));
    }
  }
}

TEST_CASE("involutions in the twisted coset form the norm-one circle") {
  for (auto [p, k] : {std::pair<i64, int>{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    Field F(p, k);
    const i64 q = F.q();
    auto S = standard_subgroups(F);
    CAPTURE(q);

    auto cyc = MatGroup::closure(F, {S.h});
    Mat id = mat_identity(F);
    std::set<Mat> found;
    for (const Mat& s : cyc.elements()) {
      Mat x = mul(F, s, S.b);
      if (mul(F, x, x) == id) found.insert(x);
    }
    CHECK(found.size() == (std::size_t)(q + 1));
    CHECK(found == circle_times(F, S.h, S.b, q - 1));
    CHECK(found.count(S.b) == 1);
  }
}

TEST_CASE("coset elements squaring to -I sit at odd half-circle positions") {
  for (auto [p, k] : {std::pair<i64, int>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
    Field F(p, k);
    const i64 q = F.q();
    auto S = standard_subgroups(F);
    CAPTURE(q);

    Mat minus_id = diag(F, F.neg(F.one()), F.neg(F.one()));
    auto cyc = MatGroup::closure(F, {S.h});
    std::set<Mat> found;
    for (const Mat& s : cyc.elements()) {
      Mat x = mul(F, s, S.b);
      if (mul(F, x, x) == minus_id) found.insert(x);
    }

    std::set<Mat> expected;
    for (i64 l = 1; l < 2 * (q + 1); l += 2)
      expected.insert(mul(F, mat_pow(F, S.h, l * (q - 1) / 2), S.b));
    CHECK(expected.size() == (std::size_t)(q + 1));
    CHECK(found == expected);
  }
}

TEST_CASE("ambient element stream matches the group order and stays sorted") {
  for (auto [p, k, n] : {std::tuple<i64, int, i64>{2, 1, 6}, {3, 1, 48},
                         {2, 2, 180}, {5, 1, 480}}) {
    Field F(p, k);
    auto gl = gl2_elements(F);
    CHECK((i64)gl.size() == n);
    CHECK(std::is_sorted(gl.begin(), gl.end()));
    for (const Mat& m : gl) CHECK(!(det(F, m) == F.zero()));
  }
  Field big(5, 2);
  CHECK_THROWS_AS(gl2_elements(big), std::invalid_argument);
}

TEST_CASE("full-order element census matches the torus count") {
  // one cyclic group of order q^2-1 per Singer class, q(q-1)/2 classes
  for (auto [p, k] : {std::pair<i64, int>{3, 1}, {2, 2}, {5, 1}}) {
    Field F(p, k);
    const i64 q = F.q();
    i64 count = 0;
    for (const Mat& m : gl2_elements(F))
      if (mat_order(F, m) == q * q - 1) ++count;
    CHECK(count == euler_phi(q * q - 1) * q * (q - 1) / 2);
  }
}

TEST_CASE("conjugacy search finds witnesses and respects obstructions") {
  Field F(5, 1);
  auto H = MatGroup::closure(F, {dia(F, 2, 1)});
  auto K = MatGroup::closure(F, {dia(F, 1, 2)});
  auto w = is_conjugate_in_gl(H, K);
  REQUIRE(w.has_value());
  for (const Mat& x : H.elements()) CHECK(K.contains(conjugate(F, *w, x)));

  // swap eigenvalue matrix is conjugate to its diagonal form
  auto A = MatGroup::closure(F, {swap_mat(F)});
  auto Dm = MatGroup::closure(F, {dia(F, 1, 4)});
  CHECK(is_conjugate_in_gl(A, Dm).has_value());

  // central and non-central involutions never fuse
  auto Z = MatGroup::closure(F, {dia(F, 4, 4)});
  auto R = MatGroup::closure(F, {dia(F, 4, 1)});
  CHECK(!is_conjugate_in_gl(Z, R).has_value());
  CHECK(!is_conjugate_in_gl(H, R).has_value());  // orders 4 vs 2

  // restricted ambient: the swap already conjugates inside the monomial group
  auto S = standard_subgroups(F);
  auto M = MatGroup::closure(F, S.M.generators);
  auto wm = is_conjugate_subgroup(M.elements(), H, K);
  REQUIRE(wm.has_value());
  for (const Mat& x : H.elements()) CHECK(K.contains(conjugate(F, *wm, x)));
}
