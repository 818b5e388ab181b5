#include "gl2cc/representatives.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gl2cc/numeric.hpp"

namespace gl2cc {
namespace {

std::vector<Mat> torus_sub_mats(const Field& F, const std::vector<i64>& sub) {
  const i64 n = F.q() - 1;
  const FElem g = F.primitive_element();
  std::vector<Mat> out;
  out.reserve(sub.size());
  for (i64 point : sub)
    out.push_back(diag(F, F.pow(g, point / n), F.pow(g, point % n)));
  std::sort(out.begin(), out.end());
  return out;
}

// smallest generating set of a diagonal group: the least element of maximal
// order, then if needed the least element completing the group
std::vector<Mat> diagonal_generators(const Field& F,
                                     const std::vector<Mat>& elems) {
  const i64 m = static_cast<i64>(elems.size());
  if (m == 1) return {};
  i64 exponent = 1;
  for (const Mat& x : elems) exponent = std::lcm(exponent, mat_order(F, x));
  Mat first = mat_identity(F);
  for (const Mat& x : elems)
    if (mat_order(F, x) == exponent) {
      first = x;
      break;
    }
  if (exponent == m) return {first};
  const i64 second_order = m / exponent;
  for (const Mat& x : elems) {
    if (mat_order(F, x) != second_order) continue;
    if (MatGroup::closure(F, {first, x}).order() == m) return {first, x};
  }
  throw std::logic_error("diagonal group has no two-element generating set");
}

Representative checked_rep(const Field& F, Geometry geometry,
                           std::string label, std::vector<Mat> gens, i64 m) {
  Representative rep;
  rep.geometry = geometry;
  rep.type_label = std::move(label);
  rep.group = MatGroup::closure(F, gens);
  rep.generators = std::move(gens);
  if (rep.group.order() != m)
    throw std::logic_error("representative has the wrong order");
  if (classify(rep.group) != geometry)
    throw std::logic_error("representative has the wrong geometry");
  return rep;
}

}  // namespace

std::vector<Representative> reducible_reps(const Field& F,
                                           const AbelianShape& shape) {
  const i64 n = F.q() - 1;
  std::vector<Representative> out;
  std::set<std::vector<i64>> seen;
  for (const std::vector<i64>& u : torus_subgroups_of_shape(F, shape)) {
    if (seen.count(u)) continue;
    std::vector<i64> ut;
    ut.reserve(u.size());
    for (i64 point : u) ut.push_back(point % n * n + point / n);
    std::sort(ut.begin(), ut.end());
    seen.insert(u);
    seen.insert(ut);
    std::vector<Mat> eu = torus_sub_mats(F, u), ev = torus_sub_mats(F, ut);
    const std::vector<Mat>& elems = eu < ev ? ev : eu;
    out.push_back(checked_rep(F, Geometry::Reducible, shape_label(shape),
                              diagonal_generators(F, elems), shape.order()));
    if (out.back().group.elements() != elems)
      throw std::logic_error("generators produced the wrong diagonal group");
  }
  return out;
}

Representative imprimitive_rep(const Field& F, const ImprimitiveSpec& spec) {
  std::vector<Mat> gens;
  for (const OddLayer& layer : spec.layers) {
    // a split layer only ever needs order p; asking for p^2 here would
    // reject torus units that do exist
    switch (layer.role) {
      case TorusRole::Central: {
        const FElem lam = F.element_of_order(ipow(layer.prime, layer.beta));
        gens.push_back(diag(F, lam, lam));
        break;
      }
      case TorusRole::Inverted: {
        const FElem lam = F.element_of_order(ipow(layer.prime, layer.beta));
        gens.push_back(diag(F, lam, F.inv(lam)));
        break;
      }
      case TorusRole::Split: {
        const FElem mu = F.element_of_order(layer.prime);
        gens.push_back(diag(F, mu, mu));
        gens.push_back(diag(F, mu, F.inv(mu)));
        break;
      }
    }
  }
  const FElem minus = F.neg(F.one());
  if (spec.has_minus_one) gens.push_back(diag(F, minus, minus));
  if (spec.p_order == 2)
    gens.push_back(swap_mat(F));
  else
    gens.push_back(mul(F, diag(F, F.one(), minus), swap_mat(F)));
  return checked_rep(F, Geometry::Imprimitive, spec.label(), std::move(gens),
                     spec.order());
}

Representative primitive_rep(const Field& F, const PrimitiveSpec& spec) {
  const StandardSubgroups sub = standard_subgroups(F);
  const i64 big = F.q() * F.q() - 1;
  std::vector<Mat> gens{mat_pow(F, sub.h, big / spec.s)};
  switch (spec.kind) {
    case PrimitiveKind::Cyclic:
      break;
    case PrimitiveKind::Involution:
      gens.push_back(sub.b);
      break;
    case PrimitiveKind::Order4:
      gens.push_back(mul(F, mat_pow(F, sub.h, (F.q() - 1) / 2), sub.b));
      break;
    case PrimitiveKind::Klein:
      gens.push_back(mat_pow(F, sub.h, big / 2));
      gens.push_back(sub.b);
      break;
  }
  return checked_rep(F, Geometry::Primitive, spec.label(), std::move(gens),
                     spec.m);
}

std::vector<Representative> all_representatives(const Field& F, i64 m) {
  const ClassTotals totals = count_all_classes(F, m);
  std::vector<Representative> out;
  for (const AbelianShape& shape : abelian_shapes_of(m))
    for (Representative& rep : reducible_reps(F, shape))
      out.push_back(std::move(rep));
  for (const ImprimitiveSpec& spec : imprimitive_specs(F, m))
    out.push_back(imprimitive_rep(F, spec));
  for (const PrimitiveSpec& spec : primitive_specs(F, m))
    out.push_back(primitive_rep(F, spec));
  if (static_cast<i64>(out.size()) != totals.total())
    throw std::logic_error("representative list disagrees with the counts");
  return out;
}

}  // namespace gl2cc
