#include "gl2cc/counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gl2cc/numeric.hpp"

namespace gl2cc {
namespace {

void require_admissible(const Field& F, i64 m) {
  factor_cube_free(m);
  if (m % F.p() == 0)
    throw std::invalid_argument("order must be prime to the characteristic");
}

i64 torus_point_order(i64 n, i64 g) {
  // std::gcd(n, 0) == n, so the identity comes out as order 1
  return std::lcm(n / std::gcd(n, g / n), n / std::gcd(n, g % n));
}

// all subgroups of Z_n x Z_n of order m, each a sorted vector of points
// packed as x * n + y
std::vector<std::vector<i64>> torus_subgroups(i64 n, i64 m) {
  if (m < 1 || (n * n) % m != 0) return {};
  std::vector<i64> divs;
  for (i64 d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    divs.push_back(d);
    if (d != m / d) divs.push_back(m / d);
  }
  std::sort(divs.begin(), divs.end());
  std::map<i64, std::vector<std::vector<i64>>> layers;
  layers[1] = {{0}};
  for (i64 d : divs) {
    if (d == 1) continue;
    std::set<std::vector<i64>> seen;
    for (auto [p, e] : factorize(d)) {
      (void)e;
      auto it = layers.find(d / p);
      if (it == layers.end()) continue;
      for (const std::vector<i64>& u : it->second) {
        for (i64 g = 1; g < n * n; ++g) {
          if (std::binary_search(u.begin(), u.end(), g)) continue;
          i64 pg = ((g / n) * p % n) * n + (g % n) * p % n;
          if (!std::binary_search(u.begin(), u.end(), pg)) continue;
          std::vector<i64> v;
          v.reserve(u.size() * p);
          for (i64 t = 0; t < p; ++t) {
            i64 tx = (g / n) * t % n, ty = (g % n) * t % n;
            for (i64 w : u)
              v.push_back((w / n + tx) % n * n + (w % n + ty) % n);
          }
          std::sort(v.begin(), v.end());
          seen.insert(std::move(v));
        }
      }
    }
    if (!seen.empty())
      layers[d] = std::vector<std::vector<i64>>(seen.begin(), seen.end());
  }
  auto it = layers.find(m);
  return it == layers.end() ? std::vector<std::vector<i64>>{} : it->second;
}

bool torus_subgroup_has_shape(i64 n, const std::vector<i64>& u,
                              const AbelianShape& shape) {
  if (static_cast<i64>(u.size()) != shape.order()) return false;
  for (const SylowShape& s : shape.sylows) {
    int maxv = 0;
    for (i64 g : u)
      maxv = std::max(maxv, valuation(torus_point_order(n, g), s.prime));
    if (maxv != (s.cyclic ? s.beta : 1)) return false;
  }
  return true;
}

bool torus_subgroup_swap_stable(i64 n, const std::vector<i64>& u) {
  for (i64 g : u)
    if (!std::binary_search(u.begin(), u.end(), (g % n) * n + g / n))
      return false;
  return true;
}

const char* role_suffix(TorusRole role) {
  switch (role) {
    case TorusRole::Central: return "c";
    case TorusRole::Inverted: return "i";
    case TorusRole::Split: return "s";
  }
  return "?";
}

}  // namespace

i64 t_count(i64 p, int beta) {
  if (beta < 1) throw std::invalid_argument("t_count needs beta >= 1");
  return ipow(p, beta) + ipow(p, beta - 1);
}

CountResult count_reducible(const Field& F, const AbelianShape& shape) {
  CountResult out;
  out.realizable = embeds_in_torus(F, shape);
  if (!out.realizable) return out;
  i64 rho = 1;
  int r = 0, beta0 = 0;
  bool p0_cyclic = true;
  for (const SylowShape& s : shape.sylows) {
    if (s.prime == 2) {
      beta0 = s.beta;
      p0_cyclic = s.cyclic;
      continue;
    }
    if (s.cyclic) {
      ++r;
      rho *= t_count(s.prime, s.beta);
    }
  }
  if (beta0 >= 1 && p0_cyclic) rho *= t_count(2, beta0);
  i64 delta = ipow(2, r);
  if (beta0 == 2 && p0_cyclic) delta *= 2;
  out.rho = rho;
  out.delta = delta;
  out.count = (rho + delta) / 2;
  return out;
}

std::vector<std::vector<i64>> torus_subgroups_of_shape(
    const Field& F, const AbelianShape& shape) {
  const i64 n = F.q() - 1;
  std::vector<std::vector<i64>> out;
  for (std::vector<i64>& u : torus_subgroups(n, shape.order()))
    if (torus_subgroup_has_shape(n, u, shape)) out.push_back(std::move(u));
  return out;
}

bool torus_swap_stable(const Field& F, const std::vector<i64>& sub) {
  return torus_subgroup_swap_stable(F.q() - 1, sub);
}

CountResult burnside_count_reducible(const Field& F, const AbelianShape& shape) {
  CountResult out;
  for (const std::vector<i64>& u : torus_subgroups_of_shape(F, shape)) {
    ++out.rho;
    if (torus_swap_stable(F, u)) ++out.delta;
  }
  out.realizable = out.rho > 0;
  if ((out.rho + out.delta) % 2 != 0)
    throw std::logic_error("orbit count must make rho + delta even");
  out.count = (out.rho + out.delta) / 2;
  return out;
}

i64 count_reducible_total(const Field& F, i64 m) {
  require_admissible(F, m);
  i64 total = 0;
  for (const AbelianShape& shape : abelian_shapes_of(m))
    total += count_reducible(F, shape).count;
  return total;
}

i64 ImprimitiveSpec::order() const {
  i64 m = p_order * (has_minus_one ? 2 : 1);
  for (const OddLayer& l : layers) m *= ipow(l.prime, l.beta);
  return m;
}

std::string ImprimitiveSpec::label() const {
  std::string l;
  if (has_minus_one) l += "-I";
  for (const OddLayer& layer : layers) {
    if (!l.empty()) l += "*";
    l += std::to_string(ipow(layer.prime, layer.beta));
    l += role_suffix(layer.role);
  }
  if (l.empty()) l = "1";
  return "L(" + l + "):P" + std::to_string(p_order);
}

std::vector<ImprimitiveSpec> imprimitive_specs(const Field& F, i64 m) {
  require_admissible(F, m);
  const i64 n = F.q() - 1;
  std::vector<std::pair<i64, int>> odd;
  int v2 = 0;
  for (auto [p, b] : factor_cube_free(m)) {
    if (p == 2)
      v2 = b;
    else
      odd.push_back({p, b});
  }
  std::vector<ImprimitiveSpec> out;
  for (int pord : {2, 4}) {
    const int beta = pord == 2 ? 1 : 2;
    if (beta > v2 || v2 - beta > 1) continue;
    const bool minus = v2 - beta == 1;
    if (minus && n % 2 != 0) continue;
    if (beta == 2 && F.q() % 2 == 0) continue;  // the square of the
                                              // reflected generator is -I
    std::vector<std::vector<TorusRole>> choices(odd.size());
    bool feasible = true;
    for (std::size_t i = 0; i < odd.size(); ++i) {
      auto [p, b] = odd[i];
      if (n % ipow(p, b) == 0) {
        choices[i].push_back(TorusRole::Central);
        choices[i].push_back(TorusRole::Inverted);
      }
      if (b == 2 && n % p == 0) choices[i].push_back(TorusRole::Split);
      if (choices[i].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(odd.size(), 0);
    while (true) {
      ImprimitiveSpec spec;
      spec.p_order = pord;
      spec.has_minus_one = minus;
      bool noncentral = false;
      for (std::size_t i = 0; i < odd.size(); ++i) {
        TorusRole role = choices[i][idx[i]];
        spec.layers.push_back({odd[i].first, odd[i].second, role});
        noncentral = noncentral || role != TorusRole::Central;
      }
      // a central L makes the group simultaneously triangularizable unless
      // the reflected part has order 4 over a field without fourth roots
      const bool reducible = !noncentral && (pord == 2 || n % 4 == 0);
      if (!reducible) {
        if (spec.order() != m) throw std::logic_error("spec order mismatch");
        out.push_back(std::move(spec));
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

i64 count_imprimitive_total(const Field& F, i64 m) {
  return static_cast<i64>(imprimitive_specs(F, m).size());
}

std::string PrimitiveSpec::label() const {
  switch (kind) {
    case PrimitiveKind::Cyclic: return "cycle(" + std::to_string(s) + ")";
    case PrimitiveKind::Involution:
      return "cycle(" + std::to_string(s) + "):2";
    case PrimitiveKind::Order4: return "cycle(" + std::to_string(s) + "):4";
    case PrimitiveKind::Klein:
      return "cycle(" + std::to_string(s) + ")*2:2";
  }
  return "?";
}

std::vector<PrimitiveSpec> primitive_specs(const Field& F, i64 m) {
  require_admissible(F, m);
  const i64 n = F.q() - 1, big = F.q() * F.q() - 1;
  const int v2 = valuation(m, 2);
  std::vector<PrimitiveSpec> out;
  if (big % m == 0 && n % m != 0 && !(m % 2 == 0 && n % (m / 2) == 0))
    out.push_back({PrimitiveKind::Cyclic, m, m});
  if (v2 == 1 && big % (m / 2) == 0 && n % (m / 2) != 0)
    out.push_back({PrimitiveKind::Involution, m, m / 2});
  if (v2 == 2 && F.q() % 2 != 0) {
    const i64 s = m / 4;
    if (big % s == 0 && n % s != 0) {
      out.push_back({PrimitiveKind::Order4, m, s});
      out.push_back({PrimitiveKind::Klein, m, s});
    }
  }
  return out;
}

i64 count_primitive_total(const Field& F, i64 m) {
  return static_cast<i64>(primitive_specs(F, m).size());
}

ClassTotals count_all_classes(const Field& F, i64 m) {
  return {count_reducible_total(F, m), count_imprimitive_total(F, m),
          count_primitive_total(F, m)};
}

}  // namespace gl2cc
