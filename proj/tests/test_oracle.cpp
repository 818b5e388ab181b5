#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gl2cc/classifier.hpp"
#include "gl2cc/oracle.hpp"

using namespace gl2cc;

namespace {

std::vector<std::size_t> class_sizes(const std::vector<std::vector<std::size_t>>& cls) {
  std::vector<std::size_t> out;
  for (const auto& c : cls) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

i64 count_elements_of_order(const Field& F, i64 n) {
  i64 count = 0;
  for (const Mat& m : gl2_elements(F))
    if (mat_order(F, m) == n) ++count;
  return count;
}

}  // namespace

TEST_CASE("involution subgroups split into the central and reflected classes") {
  Field F3(3, 1);
  Oracle o(F3);
  auto subs = o.subgroups_of_order(2);
  CHECK(subs.size() == 13);  // -I plus twelve order-two reflections
  auto cls = o.classes_of(subs);
  REQUIRE(cls.size() == 2);
  CHECK(class_sizes(cls) == std::vector<std::size_t>{1, 12});

  Field F5(5, 1);
  Oracle o5(F5);
  auto subs5 = o5.subgroups_of_order(2);
  CHECK(subs5.size() == 31);
  CHECK(o5.classes_of(subs5).size() == 2);
}

TEST_CASE("order-four subgroups of GL(2,3): three cyclic, six Klein") {
  Field F(3, 1);
  Oracle o(F);
  auto subs = o.subgroups_of_order(4);
  REQUIRE(subs.size() == 9);
  int cyclic = 0;
  for (const auto& G : subs) {
    auto orders = element_orders(G);
    if (std::count(orders.begin(), orders.end(), 4) > 0) ++cyclic;
    CHECK(is_solvable(G));
  }
  CHECK(cyclic == 3);

  auto cls = o.classes_of(subs);
  REQUIRE(cls.size() == 2);
  CHECK(class_sizes(cls) == std::vector<std::size_t>{3, 6});

  // the partition agrees with pairwise witness search
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      bool same = false;
      for (const auto& c : cls)
        if (std::count(c.begin(), c.end(), i) && std::count(c.begin(), c.end(), j))
          same = true;
      CHECK(same == is_conjugate_in_gl(subs[i], subs[j]).has_value());
    }
}

TEST_CASE("order-three subgroups of GL(2,4) and their three classes") {
  Field F(2, 2);
  Oracle o(F);
  auto subs = o.subgroups_of_order(3);
  CHECK(subs.size() == 31);
  auto cls = o.classes_of(subs);
  REQUIRE(cls.size() == 3);
  CHECK(class_sizes(cls) == std::vector<std::size_t>{1, 10, 20});
}

TEST_CASE("the perfect subgroup of GL(2,4) is found and reported whole") {
  Field F(2, 2);
  Oracle o(F);
  auto subs = o.subgroups_of_order(60);
  REQUIRE(subs.size() == 1);
  CHECK(!is_solvable(subs[0]));
  CHECK(is_perfect(subs[0]));
  CHECK(classify(subs[0]) == Geometry::Primitive);
  CHECK(o.classes_of(subs).size() == 1);

  // extending by the determinant-3 scalars reaches the full group
  auto big = o.subgroups_of_order(180);
  REQUIRE(big.size() == 1);
  CHECK(big[0].order() == 180);
}

TEST_CASE("order-four subgroups of GL(2,5): four cyclic classes and one Klein") {
  Field F(5, 1);
  Oracle o(F);
  auto subs = o.subgroups_of_order(4);
  REQUIRE(subs.size() == 91);
  auto cls = o.classes_of(subs);
  REQUIRE(cls.size() == 5);
  CHECK(class_sizes(cls) == std::vector<std::size_t>{1, 15, 15, 30, 30});

  int cyclic_classes = 0;
  for (const auto& c : cls) {
    auto orders = element_orders(subs[c[0]]);
    if (std::count(orders.begin(), orders.end(), 4) > 0) ++cyclic_classes;
  }
  CHECK(cyclic_classes == 4);
}

TEST_CASE("tiny ambient: GL(2,2) is the symmetric group on three lines") {
  Field F(2, 1);
  Oracle o(F);
  CHECK(o.subgroups_of_order(1).size() == 1);
  CHECK(o.subgroups_of_order(2).size() == 3);
  CHECK(o.subgroups_of_order(3).size() == 1);
  auto all = o.subgroups_of_order(6);
  REQUIRE(all.size() == 1);
  CHECK(all[0].order() == 6);
  CHECK(o.classes_of(o.subgroups_of_order(2)).size() == 1);
}

TEST_CASE("cyclic subgroup counts match the element census") {
  for (auto [p, k] : {std::pair<i64, int>{3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    Field F(p, k);
    Oracle o(F);
    for (i64 r : {2, 3, 5}) {
      CAPTURE(F.q());
      CAPTURE(r);
      i64 expected = count_elements_of_order(F, r) / (r - 1);
      CHECK((i64)o.subgroups_of_order(r).size() == expected);
    }
  }
}

TEST_CASE("the list of a given order is closed under ambient conjugation") {
  Field F(3, 1);
  Oracle o(F);
  auto subs = o.subgroups_of_order(4);
  Mat g{F.one(), F.one(), F.zero(), F.one()};
  for (const auto& G : subs) {
    std::vector<Mat> moved;
    for (const Mat& x : G.elements()) moved.push_back(conjugate(F, g, x));
    std::sort(moved.begin(), moved.end());
    bool found = false;
    for (const auto& H : subs)
      if (H.elements() == moved) found = true;
    CHECK(found);
  }
}

TEST_CASE("class sizes divide the ambient order") {
  Field F(5, 1);
  Oracle o(F);
  const i64 ambient = (i64)o.ambient().size();
  for (i64 m : {2, 3, 4, 6, 12}) {
    auto subs = o.subgroups_of_order(m);
    for (const auto& cls : o.classes_of(subs))
      CHECK(ambient % (i64)cls.size() == 0);
  }
}

TEST_CASE("rejects non-cube-free orders and oversized fields") {
  Field F(5, 1);
  Oracle o(F);
  CHECK_THROWS_AS(o.subgroups_of_order(8), std::invalid_argument);
  CHECK_THROWS_AS(o.subgroups_of_order(24), std::invalid_argument);
  CHECK_THROWS_AS(o.subgroups_of_order(0), std::invalid_argument);

  Field F13(13, 1);
  CHECK_THROWS_AS((Oracle{F13}), std::invalid_argument);
  Field F16(2, 4);
  CHECK_THROWS_AS((Oracle{F16, {true}}), std::invalid_argument);
}

TEST_CASE("extended cap admits q=13 for small orders") {
  Field F(13, 1);
  Oracle o(F, {true});
  auto subs = o.subgroups_of_order(2);
  CHECK(subs.size() == 183);  // 1 + q(q+1)
  CHECK(o.classes_of(subs).size() == 2);
}

TEST_CASE("repeated queries are deterministic") {
  Field F(5, 1);
  Oracle a(F), b(F);
  auto x = a.subgroups_of_order(6);
  auto y = b.subgroups_of_order(6);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
}
