#ifndef GL2CC_REPRESENTATIVES_HPP_
#define GL2CC_REPRESENTATIVES_HPP_

#include <string>
#include <vector>

#include "gl2cc/classifier.hpp"
#include "gl2cc/counting.hpp"
#include "gl2cc/matgroup.hpp"

namespace gl2cc {

// one subgroup per conjugacy class, built from explicit generators and
// checked for order and geometry on construction
struct Representative {
  Geometry geometry = Geometry::Reducible;
  std::string type_label;
  std::vector<Mat> generators;
  MatGroup group;
};

// diagonal subgroups of the given type, one per coordinate-swap orbit;
// the orbit member whose element list is lexicographically largest is
// returned, generated by its smallest element of maximal order
std::vector<Representative> reducible_reps(const Field& F,
                                           const AbelianShape& shape);

Representative imprimitive_rep(const Field& F, const ImprimitiveSpec& spec);
Representative primitive_rep(const Field& F, const PrimitiveSpec& spec);

// every conjugacy class of solvable subgroups of order m, reducible first,
// then imprimitive, then primitive; requires gcd(m, p) = 1 and m cube-free
std::vector<Representative> all_representatives(const Field& F, i64 m);

}  // namespace gl2cc

#endif
