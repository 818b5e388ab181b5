#ifndef GL2CC_COUNTING_HPP_
#define GL2CC_COUNTING_HPP_

#include <string>
#include <vector>

#include "gl2cc/shapes.hpp"

namespace gl2cc {

// ---- reducible: classes of torus subgroups up to the coordinate swap ----

struct CountResult {
  i64 rho = 0;    // subgroups of the torus with the given type
  i64 delta = 0;  // those stable under the coordinate swap
  i64 count = 0;  // swap orbits: (rho + delta) / 2
  bool realizable = false;
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

// cyclic subgroups of order p^beta inside Z_{p^beta} x Z_{p^beta}
i64 t_count(i64 p, int beta);

// closed form
CountResult count_reducible(const Field& F, const AbelianShape& shape);
// independent route: enumerate subgroups of Z_{q-1} x Z_{q-1} of the type
// and count swap orbits directly
CountResult burnside_count_reducible(const Field& F, const AbelianShape& shape);

// subgroups of the diagonal torus with the given type, each a sorted list
// of exponent pairs packed as x * (q-1) + y relative to the canonical
// generator of the unit group
std::vector<std::vector<i64>> torus_subgroups_of_shape(const Field& F,
                                                       const AbelianShape& shape);
bool torus_swap_stable(const Field& F, const std::vector<i64>& sub);
// sum over all abelian types of order m; requires gcd(m, p) = 1
i64 count_reducible_total(const Field& F, i64 m);

// ---- imprimitive: a swap-stable torus part plus a reflected 2-part ----

enum class TorusRole {
  Central,   // dia(l, l)
  Inverted,  // dia(l, l^-1)
  Split      // dia(l, l) and dia(l, l^-1) together, beta = 2 only
};

struct OddLayer {
  i64 prime = 0;
  int beta = 1;
  TorusRole role = TorusRole::Central;
  friend bool operator==(const OddLayer&, const OddLayer&) = default;
};

// L x P data: odd torus layers, an optional central -I, and a cyclic
// reflected part of order 2 or 4; each value names one conjugacy class
struct ImprimitiveSpec {
  std::vector<OddLayer> layers;
  bool has_minus_one = false;
  int p_order = 2;
  i64 order() const;
  std::string label() const;
  friend bool operator==(const ImprimitiveSpec&, const ImprimitiveSpec&) = default;
};

std::vector<ImprimitiveSpec> imprimitive_specs(const Field& F, i64 m);
i64 count_imprimitive_total(const Field& F, i64 m);

// ---- primitive: inside the normalizer of the Singer cycle ----

enum class PrimitiveKind {
  Cyclic,      // the cycle subgroup of order m itself
  Involution,  // cycle part of order s = m/2, twisted by an involution
  Order4,      // odd cycle part s = m/4, twisted by an order-4 element
  Klein        // odd cycle part s = m/4, with -I and a twisting involution
};

struct PrimitiveSpec {
  PrimitiveKind kind = PrimitiveKind::Cyclic;
  i64 m = 1;  // group order
  i64 s = 1;  // order of the cycle part L
  std::string label() const;
  friend bool operator==(const PrimitiveSpec&, const PrimitiveSpec&) = default;
};

std::vector<PrimitiveSpec> primitive_specs(const Field& F, i64 m);
i64 count_primitive_total(const Field& F, i64 m);

// ---- all geometries together ----

struct ClassTotals {
  i64 reducible = 0, imprimitive = 0, primitive = 0;
  i64 total() const { return reducible + imprimitive + primitive; }
  friend bool operator==(const ClassTotals&, const ClassTotals&) = default;
};

// solvable classes of order m by geometry; requires gcd(m, p) = 1
ClassTotals count_all_classes(const Field& F, i64 m);

}  // namespace gl2cc

#endif
