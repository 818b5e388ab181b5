#include "gl2cc/matgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gl2cc/numeric.hpp"

namespace gl2cc {

namespace {

constexpr i64 kStandardCapQ = 1024;
constexpr i64 kAmbientCapQ = 13;

// Quadratic extension GF(q^2) = GF(q)[y] / (y^2 + c1*y + c0), elements a + b*y.
// The modulus is the first irreducible quadratic in (c1, c0) packed order.
struct Ext {
  FElem a, b;
};

struct Tower {
  const Field& F;
  FElem c0, c1;
  std::vector<std::pair<i64, int>> unit_factors;  // of q^2 - 1

  explicit Tower(const Field& base) : F(base), c0(base.zero()), c1(base.zero()) {
    const i64 q = F.q();
    bool found = false;
    for (i64 v1 = 0; v1 < q && !found; ++v1) {
      for (i64 v0 = 0; v0 < q && !found; ++v0) {
        FElem a1 = F.from_packed(v1), a0 = F.from_packed(v0);
        bool irred = true;
        for (i64 t = 0; t < q; ++t) {
          FElem tv = F.from_packed(t);
          FElem val = F.add(F.add(F.mul(tv, tv), F.mul(a1, tv)), a0);
          if (val == F.zero()) {
            irred = false;
            break;
          }
        }
        if (irred) {
          c1 = a1;
          c0 = a0;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("no irreducible quadratic over the base field");
    unit_factors = factorize(q * q - 1);
  }

  Ext one() const { return {F.one(), F.zero()}; }
  bool is_one(const Ext& x) const { return x.a == F.one() && x.b == F.zero(); }

  Ext mul(const Ext& x, const Ext& y) const {
    // (a1 + b1 y)(a2 + b2 y) with y^2 = -c1*y - c0
    FElem bb = F.mul(x.b, y.b);
    FElem cross = F.add(F.mul(x.a, y.b), F.mul(x.b, y.a));
    return {F.sub(F.mul(x.a, y.a), F.mul(c0, bb)), F.sub(cross, F.mul(c1, bb))};
  }

  Ext pow(Ext x, i64 e) const {
    Ext r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  // multiplicative order, or 0 for the zero element
  i64 order(const Ext& x) const {
    i64 o = F.q() * F.q() - 1;
    if (!is_one(pow(x, o))) return 0;
    for (auto [p, e] : unit_factors) {
      (void)e;
      while (o % p == 0 && is_one(pow(x, o / p))) o /= p;
    }
    return o;
  }

  // first generator of the multiplicative group in (b, a) packed order
  Ext primitive() const {
    const i64 q = F.q();
    for (i64 idx = 1; idx < q * q; ++idx) {
      Ext x{F.from_packed(idx % q), F.from_packed(idx / q)};
      if (order(x) == q * q - 1) return x;
    }
    throw std::logic_error("no multiplicative generator found");
  }
};

void check_order_by_factors(const Field& F, const Mat& m, i64 n) {
  Mat id = mat_identity(F);
  if (!(mat_pow(F, m, n) == id)) throw std::logic_error("constructed element has wrong order");
  for (auto [p, e] : factorize(n)) {
    (void)e;
    if (mat_pow(F, m, n / p) == id) throw std::logic_error("constructed element has wrong order");
  }
}

}  // namespace

MatGroup MatGroup::closure(const Field& F, std::vector<Mat> gens) {
  auto out = closure_bounded(F, gens, (std::size_t)-1);
  return std::move(*out);
}

std::optional<MatGroup> MatGroup::closure_bounded(const Field& F,
                                                  const std::vector<Mat>& gens,
                                                  std::size_t cap) {
  for (const Mat& g : gens)
    if (det(F, g) == F.zero()) throw std::invalid_argument("singular generator");

  std::vector<Mat> elems{mat_identity(F)};
  std::unordered_set<std::uint64_t> seen{mat_code(F, elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Mat& g : gens) {
      Mat next = mul(F, elems[i], g);
      if (seen.insert(mat_code(F, next)).second) {
        if (elems.size() >= cap) return std::nullopt;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());

  MatGroup G;
  G.field_ = &F;
  G.gens_ = std::move(gens);
  G.elems_ = std::move(elems);
  return G;
}

MatGroup MatGroup::assemble(const Field& F, std::vector<Mat> gens,
                            std::vector<Mat> elements) {
  std::sort(elements.begin(), elements.end());
  MatGroup G;
  G.field_ = &F;
  G.gens_ = std::move(gens);
  G.elems_ = std::move(elements);
  return G;
}

bool MatGroup::contains(const Mat& m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m);
}

StandardSubgroups standard_subgroups(const Field& F) {
  const i64 q = F.q();
  if (q > kStandardCapQ) throw std::invalid_argument("standard_subgroups: q too large");

  Tower T(F);
  Ext xi = T.primitive();
  Ext xiq = T.pow(xi, q);
  Ext trE{F.add(xi.a, xiq.a), F.add(xi.b, xiq.b)};
  Ext nmE = T.mul(xi, xiq);
  if (!(trE.b == F.zero() && nmE.b == F.zero()))
    throw std::logic_error("trace or norm left the base field");
  FElem tr = trE.a, nm = nmE.a;

  // companion matrix of x^2 - tr*x + nm, the minimal polynomial of xi;
  // multiplication by xi on the basis {1, xi}, so its order is q^2 - 1
  Mat h{F.zero(), F.neg(nm), F.one(), tr};
  check_order_by_factors(F, h, q * q - 1);

  // Frobenius on the same basis: fixes 1 and sends xi to tr - xi
  Mat id = mat_identity(F);
  Mat b0{F.one(), tr, F.zero(), F.neg(F.one())};
  if (!(mul(F, b0, b0) == id)) throw std::logic_error("Frobenius matrix is not an involution");
  if (!(mul(F, b0, h) == mul(F, mat_pow(F, h, q), b0)))
    throw std::logic_error("Frobenius matrix does not twist the cycle generator");

  // every involution in the nontrivial coset is h^{i(q-1)} b0; pick the least
  Mat hstep = mat_pow(F, h, q - 1);
  Mat x = id, b = b0;
  for (i64 i = 1; i <= q; ++i) {
    x = mul(F, x, hstep);
    Mat cand = mul(F, x, b0);
    if (!(mul(F, cand, cand) == id)) throw std::logic_error("coset involution scan broke");
    if (cand < b) b = cand;
  }

  StandardSubgroups std_groups;
  std_groups.a = swap_mat(F);
  std_groups.h = h;
  std_groups.b = b;

  FElem g = F.primitive_element();
  std_groups.D = {{diag(F, g, F.one()), diag(F, F.one(), g)}, (q - 1) * (q - 1)};
  std_groups.M = {{diag(F, g, F.one()), diag(F, F.one(), g), std_groups.a},
                  2 * (q - 1) * (q - 1)};
  std_groups.S = {{h}, q * q - 1};
  std_groups.N = {{h, b}, 2 * (q * q - 1)};
  return std_groups;
}

std::vector<Mat> gl2_elements(const Field& F) {
  const i64 q = F.q();
  if (q > kAmbientCapQ) throw std::invalid_argument("gl2_elements: q too large");
  std::vector<Mat> out;
  out.reserve((std::size_t)((q * q - 1) * (q * q - q)));
  for (i64 v11 = 0; v11 < q; ++v11)
    for (i64 v12 = 0; v12 < q; ++v12)
      for (i64 v21 = 0; v21 < q; ++v21)
        for (i64 v22 = 0; v22 < q; ++v22) {
          Mat m{F.from_packed(v11), F.from_packed(v12), F.from_packed(v21),
                F.from_packed(v22)};
          if (!(det(F, m) == F.zero())) out.push_back(m);
        }
  return out;
}

std::optional<Mat> is_conjugate_subgroup(std::span<const Mat> ambient,
                                         const MatGroup& H, const MatGroup& K) {
  if (H.order() != K.order()) return std::nullopt;
  const Field& F = H.field();
  for (const Mat& g : ambient) {
    if (det(F, g) == F.zero()) continue;
    Mat gi = inverse(F, g);
    bool ok = true;
    for (const Mat& x : H.generators()) {
      Mat y = mul(F, mul(F, g, x), gi);
      if (!K.contains(y)) {
        ok = false;
        break;
      }
    }
    // generators land inside K and the orders match, so the images span K
    if (ok) return g;
  }
  return std::nullopt;
}

std::optional<Mat> is_conjugate_in_gl(const MatGroup& H, const MatGroup& K) {
  auto ambient = gl2_elements(H.field());
  return is_conjugate_subgroup(ambient, H, K);
}

}  // namespace gl2cc
