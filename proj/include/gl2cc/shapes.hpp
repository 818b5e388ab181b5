#ifndef GL2CC_SHAPES_HPP_
#define GL2CC_SHAPES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gl2cc/field.hpp"
#include "gl2cc/numeric.hpp"

namespace gl2cc {

// one prime layer of an abelian group of cube-free order: Z_{p^beta} when
// cyclic, Z_p x Z_p otherwise (so beta == 1 forces cyclic)
struct SylowShape {
  i64 prime = 0;
  int beta = 1;
  bool cyclic = true;
  friend bool operator==(const SylowShape&, const SylowShape&) = default;
};

// abelian isomorphism type of cube-free order; primes strictly ascending
struct AbelianShape {
  std::vector<SylowShape> sylows;
  i64 order() const;
  friend bool operator==(const AbelianShape&, const AbelianShape&) = default;
};

// (prime, exponent) pairs with every exponent in {1, 2}; throws when m < 1
// or some exponent reaches 3
std::vector<std::pair<i64, int>> factor_cube_free(i64 m);

bool is_cube_free_order(i64 m);

// every abelian isomorphism type of cube-free order m, all-cyclic type first
std::vector<AbelianShape> abelian_shapes_of(i64 m);

// whether the type embeds in Z_{q-1} x Z_{q-1}
bool embeds_in_torus(const Field& F, const AbelianShape& shape);

// the embeddable types only, in abelian_shapes_of order
std::vector<AbelianShape> abelian_shapes_in_torus(const Field& F, i64 m);

// short text form such as "4x9" for Z4 x Z9 or "(2x2)x3" for Klein x Z3
std::string shape_label(const AbelianShape& shape);

}  // namespace gl2cc

#endif
