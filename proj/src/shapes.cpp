#include "gl2cc/shapes.hpp"

#include <stdexcept>
#include <string>

namespace gl2cc {

i64 AbelianShape::order() const {
  i64 n = 1;
  for (const SylowShape& s : sylows) n *= ipow(s.prime, s.beta);
  return n;
}

std::vector<std::pair<i64, int>> factor_cube_free(i64 m) {
  auto fac = factorize(m);
  for (auto [p, e] : fac) {
    (void)p;
    if (e > 2) throw std::invalid_argument("order is not cube-free");
  }
  return fac;
}

bool is_cube_free_order(i64 m) { return m >= 1 && is_cube_free(m); }

std::vector<AbelianShape> abelian_shapes_of(i64 m) {
  auto fac = factor_cube_free(m);
  std::vector<std::size_t> square_slots;
  for (std::size_t i = 0; i < fac.size(); ++i)
    if (fac[i].second == 2) square_slots.push_back(i);

  std::vector<AbelianShape> out;
  for (std::uint64_t mask = 0; mask < (1ull << square_slots.size()); ++mask) {
    AbelianShape shape;
    for (auto [p, e] : fac) shape.sylows.push_back({p, e, true});
    for (std::size_t j = 0; j < square_slots.size(); ++j)
      if (mask >> j & 1) shape.sylows[square_slots[j]].cyclic = false;
    out.push_back(std::move(shape));
  }
  return out;
}

bool embeds_in_torus(const Field& F, const AbelianShape& shape) {
  // Z_{p^b} needs an order-p^b element of Z_{q-1}; Z_p x Z_p needs one
  // order-p element per coordinate
  const i64 n = F.q() - 1;
  for (const SylowShape& s : shape.sylows) {
    i64 need = s.cyclic ? ipow(s.prime, s.beta) : s.prime;
    if (n % need != 0) return false;
  }
  return true;
}

std::vector<AbelianShape> abelian_shapes_in_torus(const Field& F, i64 m) {
  std::vector<AbelianShape> out;
  for (AbelianShape& s : abelian_shapes_of(m))
    if (embeds_in_torus(F, s)) out.push_back(std::move(s));
  return out;
}

std::string shape_label(const AbelianShape& shape) {
  if (shape.sylows.empty()) return "1";
  std::string out;
  for (const SylowShape& s : shape.sylows) {
    if (!out.empty()) out += "x";
    if (s.cyclic)
      out += std::to_string(ipow(s.prime, s.beta));
    else
      out += "(" + std::to_string(s.prime) + "x" + std::to_string(s.prime) + ")";
  }
  return out;
}

}  // namespace gl2cc
