#ifndef GL2CC_CLASSIFIER_HPP_
#define GL2CC_CLASSIFIER_HPP_

#include <tuple>
#include <vector>

#include "gl2cc/matgroup.hpp"
#include "gl2cc/shapes.hpp"

namespace gl2cc {

// how a subgroup sits on the projective line: a fixed point, a stabilized
// unordered pair, or neither
enum class Geometry { Reducible, Imprimitive, Primitive };

const char* geometry_name(Geometry g);

// point of the projective line, normalized so x = 1, or x = 0 and y = 1
struct Line {
  FElem x, y;
  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& a, const Line& b) {
    return std::tie(a.x.v, a.y.v) < std::tie(b.x.v, b.y.v);
  }
};

// the q+1 points: (0,1) first, then (1,t) with t ascending
std::vector<Line> all_lines(const Field& F);
Line line_image(const Field& F, const Mat& m, const Line& L);

// lines fixed by every generator (hence by the whole group)
std::vector<Line> fixed_lines(const MatGroup& G);

bool is_reducible(const MatGroup& G);
// irreducible with a stabilized pair of lines
bool is_imprimitive(const MatGroup& G);
Geometry classify(const MatGroup& G);

bool is_abelian(const MatGroup& G);
// commutator subgroup, generated by all element-pair commutators
MatGroup derived_subgroup(const MatGroup& G);
bool is_solvable(const MatGroup& G);
bool is_perfect(const MatGroup& G);

// orders of all elements, ascending
std::vector<i64> element_orders(const MatGroup& G);

// isomorphism type of an abelian group of cube-free order; throws otherwise
AbelianShape abelian_shape_of(const MatGroup& G);

// per-prime Sylow type of any group of cube-free order, read off the
// element orders: a Sylow of order p^2 is cyclic iff some element has
// order p^2; order-p Sylows are always cyclic
AbelianShape sylow_fingerprint(const MatGroup& G);

// abstract group isomorphism; the groups may live over different fields
bool is_isomorphic(const MatGroup& A, const MatGroup& B);

}  // namespace gl2cc

#endif
