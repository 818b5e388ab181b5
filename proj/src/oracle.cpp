#include "gl2cc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl2cc/classifier.hpp"
#include "gl2cc/numeric.hpp"
#include "gl2cc/shapes.hpp"

namespace gl2cc {

namespace {
constexpr i64 kPerfectOrder = 60;  // the one perfect cube-free order that occurs
}

Oracle::Oracle(const Field& F, OracleOptions opts) : F_(F), opts_(opts) {
  const i64 cap = opts_.extended ? 13 : 11;
  if (F.q() > cap) throw std::invalid_argument("oracle: q exceeds the enumeration cap");
  gl_ = gl2_elements(F);
  codes_.reserve(gl_.size());
  orders_.reserve(gl_.size());
  for (const Mat& m : gl_) {
    codes_.push_back(mat_code(F, m));
    orders_.push_back(mat_order(F, m));
  }
}

std::int32_t Oracle::index_of(const Mat& m) const {
  std::uint64_t c = mat_code(F_, m);
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c)
    throw std::logic_error("matrix outside the ambient group");
  return (std::int32_t)(it - codes_.begin());
}

void Oracle::extend_layer(const std::vector<Sub>& parents, i64 p,
                          std::set<Elems>& seen, std::vector<Sub>& out) {
  const i64 child_order = parents.empty() ? 0 : (i64)parents[0].elems.size() * p;
  for (const Sub& U : parents) {
    for (std::int32_t g = 0; g < (std::int32_t)gl_.size(); ++g) {
      if (child_order % orders_[g] != 0) continue;  // Lagrange filter
      if (std::binary_search(U.elems.begin(), U.elems.end(), g)) continue;

      // image of g in N(U)/U must have order exactly p
      Mat gp = mat_pow(F_, at(g), p);
      if (!std::binary_search(U.elems.begin(), U.elems.end(), index_of(gp)))
        continue;

      Mat gi = inverse(F_, at(g));
      bool normalizes = true;
      for (std::int32_t s : U.gens) {
        Mat c = mul(F_, mul(F_, at(g), at(s)), gi);
        if (!std::binary_search(U.elems.begin(), U.elems.end(), index_of(c))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;

      // V = U + Ug + ... + Ug^{p-1}, a group since g normalizes U
      Elems v = U.elems;
      Mat gpow = at(g);
      for (i64 i = 1; i < p; ++i) {
        for (std::int32_t u : U.elems) v.push_back(index_of(mul(F_, at(u), gpow)));
        gpow = mul(F_, gpow, at(g));
      }
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::logic_error("coset extension produced duplicates");

      if (seen.insert(v).second) {
        Sub child{std::move(v), U.gens};
        child.gens.push_back(g);
        out.push_back(std::move(child));
      }
    }
  }
}

void Oracle::seed_perfect(std::set<Elems>& seen, std::vector<Sub>& out) {
  std::vector<std::int32_t> invs, thirds;
  for (std::int32_t i = 0; i < (std::int32_t)gl_.size(); ++i) {
    if (orders_[i] == 2) invs.push_back(i);
    if (orders_[i] == 3) thirds.push_back(i);
  }
  std::set<Elems> candidates_done;
  for (std::int32_t t : invs)
    for (std::int32_t u : thirds) {
      auto G = MatGroup::closure_bounded(F_, {at(t), at(u)}, kPerfectOrder);
      if (!G || G->order() != kPerfectOrder) continue;
      Elems key;
      key.reserve((std::size_t)kPerfectOrder);
      for (const Mat& m : G->elements()) key.push_back(index_of(m));
      if (!candidates_done.insert(key).second) continue;
      if (!is_perfect(*G)) continue;
      if (seen.insert(key).second) out.push_back({std::move(key), {t, u}});
    }
}

const std::vector<Oracle::Sub>& Oracle::layer(i64 d) {
  auto hit = layers_.find(d);
  if (hit != layers_.end()) return hit->second;

  std::vector<Sub> out;
  if (d == 1) {
    out.push_back({{index_of(mat_identity(F_))}, {}});
  } else {
    std::set<Elems> seen;
    for (auto [p, e] : factorize(d)) {
      (void)e;
      const std::vector<Sub>& parents = layer(d / p);  // map nodes stay put
      extend_layer(parents, p, seen, out);
    }
    if (d == kPerfectOrder) seed_perfect(seen, out);
    std::sort(out.begin(), out.end(),
              [](const Sub& a, const Sub& b) { return a.elems < b.elems; });
  }
  return layers_.emplace(d, std::move(out)).first->second;
}

std::vector<MatGroup> Oracle::subgroups_of_order(i64 m) {
  factor_cube_free(m);  // rejects non-cube-free orders
  std::vector<MatGroup> out;
  for (const Sub& s : layer(m)) {
    std::vector<Mat> gens, elems;
    for (std::int32_t g : s.gens) gens.push_back(at(g));
    elems.reserve(s.elems.size());
    for (std::int32_t x : s.elems) elems.push_back(at(x));
    out.push_back(MatGroup::assemble(F_, std::move(gens), std::move(elems)));
  }
  return out;
}

std::vector<std::vector<std::size_t>> Oracle::classes_of(
    const std::vector<MatGroup>& groups) const {
  std::map<Elems, std::size_t> pos;
  std::vector<Elems> keys(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Elems key;
    key.reserve((std::size_t)groups[i].order());
    for (const Mat& m : groups[i].elements()) key.push_back(index_of(m));
    if (!pos.emplace(key, i).second)
      throw std::invalid_argument("duplicate subgroup in class partition input");
    keys[i] = std::move(key);
  }

  std::vector<char> done(groups.size(), 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (done[i]) continue;
    std::set<std::size_t> orbit{i};
    done[i] = 1;
    for (const Mat& g : gl_) {
      Mat gi = inverse(F_, g);
      Elems image;
      image.reserve(keys[i].size());
      for (std::int32_t x : keys[i])
        image.push_back(index_of(mul(F_, mul(F_, g, at(x)), gi)));
      std::sort(image.begin(), image.end());
      auto it = pos.find(image);
      if (it == pos.end())
        throw std::logic_error("conjugate of a listed subgroup is missing");
      if (!done[it->second]) done[it->second] = 1;
      orbit.insert(it->second);
    }
    // canonical member: least element set
    std::vector<std::size_t> cls(orbit.begin(), orbit.end());
    std::sort(cls.begin(), cls.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) { return keys[a[0]] < keys[b[0]]; });
  return classes;
}

std::vector<MatGroup> all_subgroups_of_order(const Field& F, i64 m,
                                             OracleOptions opts) {
  Oracle o(F, opts);
  return o.subgroups_of_order(m);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(
    const Field& F, const std::vector<MatGroup>& groups) {
  Oracle o(F);
  return o.classes_of(groups);
}

}  // namespace gl2cc
