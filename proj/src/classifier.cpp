#include "gl2cc/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gl2cc {

const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Reducible: return "reducible";
    case Geometry::Imprimitive: return "imprimitive";
    case Geometry::Primitive: return "primitive";
  }
  return "?";
}

std::vector<Line> all_lines(const Field& F) {
  std::vector<Line> out;
  out.push_back({F.zero(), F.one()});
  for (i64 t = 0; t < F.q(); ++t) out.push_back({F.one(), F.from_packed(t)});
  return out;
}

Line line_image(const Field& F, const Mat& m, const Line& L) {
  FElem x = F.add(F.mul(m.e11, L.x), F.mul(m.e12, L.y));
  FElem y = F.add(F.mul(m.e21, L.x), F.mul(m.e22, L.y));
  if (x == F.zero()) {
    if (y == F.zero()) throw std::invalid_argument("line collapsed: matrix is singular");
    return {F.zero(), F.one()};
  }
  return {F.one(), F.mul(y, F.inv(x))};
}

std::vector<Line> fixed_lines(const MatGroup& G) {
  const Field& F = G.field();
  std::vector<Line> out;
  for (const Line& L : all_lines(F)) {
    bool fixed = true;
    for (const Mat& g : G.generators())
      if (!(line_image(F, g, L) == L)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(L);
  }
  return out;
}

namespace {

bool has_stable_pair(const MatGroup& G) {
  const Field& F = G.field();
  auto lines = all_lines(F);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      bool stable = true;
      for (const Mat& g : G.generators()) {
        Line a = line_image(F, g, lines[i]);
        Line b = line_image(F, g, lines[j]);
        bool a_in = a == lines[i] || a == lines[j];
        bool b_in = b == lines[i] || b == lines[j];
        if (!a_in || !b_in) {
          stable = false;
          break;
        }
      }
      if (stable) return true;
    }
  return false;
}

}  // namespace

bool is_reducible(const MatGroup& G) { return !fixed_lines(G).empty(); }

bool is_imprimitive(const MatGroup& G) {
  return !is_reducible(G) && has_stable_pair(G);
}

Geometry classify(const MatGroup& G) {
  if (is_reducible(G)) return Geometry::Reducible;
  if (has_stable_pair(G)) return Geometry::Imprimitive;
  return Geometry::Primitive;
}

bool is_abelian(const MatGroup& G) {
  const Field& F = G.field();
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(mul(F, gens[i], gens[j]) == mul(F, gens[j], gens[i]))) return false;
  return true;
}

MatGroup derived_subgroup(const MatGroup& G) {
  const Field& F = G.field();
  const auto& elems = G.elements();
  std::vector<Mat> inv(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) inv[i] = inverse(F, elems[i]);

  std::set<std::uint64_t> seen;
  std::vector<Mat> comms;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      Mat c = mul(F, mul(F, elems[i], elems[j]), mul(F, inv[i], inv[j]));
      if (seen.insert(mat_code(F, c)).second) comms.push_back(c);
    }
  return MatGroup::closure(F, std::move(comms));
}

bool is_solvable(const MatGroup& G) {
  MatGroup H = G;
  while (H.order() > 1) {
    MatGroup D = derived_subgroup(H);
    if (D.order() == H.order()) return false;
    H = std::move(D);
  }
  return true;
}

bool is_perfect(const MatGroup& G) {
  return derived_subgroup(G).order() == G.order();
}

std::vector<i64> element_orders(const MatGroup& G) {
  const Field& F = G.field();
  std::vector<i64> out;
  out.reserve(G.elements().size());
  for (const Mat& m : G.elements()) out.push_back(mat_order(F, m));
  std::sort(out.begin(), out.end());
  return out;
}

AbelianShape abelian_shape_of(const MatGroup& G) {
  if (!is_abelian(G)) throw std::invalid_argument("abelian input required");
  return sylow_fingerprint(G);
}

AbelianShape sylow_fingerprint(const MatGroup& G) {
  auto orders = element_orders(G);
  std::set<i64> present(orders.begin(), orders.end());

  AbelianShape shape;
  for (auto [p, beta] : factor_cube_free(G.order())) {
    bool cyclic = beta == 1;
    for (i64 o : present)
      if (o % (p * p) == 0) cyclic = true;
    shape.sylows.push_back({p, beta, cyclic});
  }
  return shape;
}

namespace {

// Build the map <xs> -> <ys> determined by xs[j] -> ys[j] along the right
// Cayley graph, checking every edge; returns true when it is a well-defined
// injection (hence an isomorphism onto <ys>).
bool partial_embedding(const Field& FA, const Field& FB,
                       const std::vector<Mat>& xs, const std::vector<Mat>& ys) {
  std::map<std::uint64_t, Mat> phi;
  std::vector<Mat> queue{mat_identity(FA)};
  phi[mat_code(FA, queue[0])] = mat_identity(FB);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Mat v = mul(FA, queue[i], xs[j]);
      Mat w = mul(FB, phi.at(mat_code(FA, queue[i])), ys[j]);
      auto [it, fresh] = phi.try_emplace(mat_code(FA, v), w);
      if (fresh)
        queue.push_back(v);
      else if (!(it->second == w))
        return false;
    }
  std::set<std::uint64_t> images;
  for (const auto& [code, w] : phi) images.insert(mat_code(FB, w));
  return images.size() == phi.size();
}

// short generating sequence, preferring high-order elements
std::vector<Mat> generating_sequence(const MatGroup& G) {
  const Field& F = G.field();
  std::vector<std::pair<i64, Mat>> ranked;
  for (const Mat& m : G.elements()) ranked.push_back({-mat_order(F, m), m});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Mat> gens;
  MatGroup K = MatGroup::closure(F, {});
  for (const auto& [negord, m] : ranked) {
    (void)negord;
    if (K.order() == G.order()) break;
    if (!K.contains(m)) {
      gens.push_back(m);
      K = MatGroup::closure(F, gens);
    }
  }
  return gens;
}

bool search_images(const Field& FA, const Field& FB,
                   const std::vector<Mat>& gens,
                   const std::vector<std::vector<Mat>>& candidates,
                   std::vector<Mat>& ys, std::size_t t) {
  if (t == gens.size()) return true;
  std::vector<Mat> prefix(gens.begin(), gens.begin() + (std::ptrdiff_t)t + 1);
  for (const Mat& cand : candidates[t]) {
    ys.push_back(cand);
    if (partial_embedding(FA, FB, prefix, ys) &&
        search_images(FA, FB, gens, candidates, ys, t + 1))
      return true;
    ys.pop_back();
  }
  return false;
}

}  // namespace

bool is_isomorphic(const MatGroup& A, const MatGroup& B) {
  if (A.order() != B.order()) return false;
  if (element_orders(A) != element_orders(B)) return false;
  bool ab_a = is_abelian(A), ab_b = is_abelian(B);
  if (ab_a != ab_b) return false;
  if (ab_a) return true;  // matching order multisets settle the abelian case

  const Field& FA = A.field();
  const Field& FB = B.field();
  auto gens = generating_sequence(A);

  std::map<i64, std::vector<Mat>> by_order;
  for (const Mat& m : B.elements()) by_order[mat_order(FB, m)].push_back(m);
  std::vector<std::vector<Mat>> candidates;
  for (const Mat& g : gens) candidates.push_back(by_order[mat_order(FA, g)]);

  std::vector<Mat> ys;
  return search_images(FA, FB, gens, candidates, ys, 0);
}

}  // namespace gl2cc
