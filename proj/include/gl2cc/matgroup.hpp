#ifndef GL2CC_MATGROUP_HPP_
#define GL2CC_MATGROUP_HPP_

#include <optional>
#include <span>
#include <vector>

#include "gl2cc/mat.hpp"

namespace gl2cc {

// A finite subgroup of GL(2,q): generator list plus the full element set,
// sorted in the canonical matrix order. Equality and the canonical group
// order compare the element vectors. Immutable once built.
class MatGroup {
 public:
  MatGroup() = default;

  // breadth-first closure of the generators (identity if none)
  static MatGroup closure(const Field& F, std::vector<Mat> gens);
  // same, but gives up once the element count would exceed cap
  static std::optional<MatGroup> closure_bounded(const Field& F,
                                                 const std::vector<Mat>& gens,
                                                 std::size_t cap);
  // wrap an already-known element set; the caller guarantees closure
  static MatGroup assemble(const Field& F, std::vector<Mat> gens,
                           std::vector<Mat> elements);

  const Field& field() const { return *field_; }
  i64 order() const { return (i64)elems_.size(); }
  const std::vector<Mat>& elements() const { return elems_; }
  const std::vector<Mat>& generators() const { return gens_; }
  bool contains(const Mat& m) const;

  friend bool operator==(const MatGroup& a, const MatGroup& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator<(const MatGroup& a, const MatGroup& b) {
    return a.elems_ < b.elems_;
  }

 private:
  const Field* field_ = nullptr;
  std::vector<Mat> gens_, elems_;
};

// generator list with the group order known in advance; element sets of the
// monomial and Singer normalizers grow like q^2, so they stay lazy
struct GroupDescriptor {
  std::vector<Mat> generators;
  i64 order = 0;
};

struct StandardSubgroups {
  Mat a;  // coordinate swap
  Mat h;  // Singer generator of order q^2 - 1
  Mat b;  // involution with b h b^-1 = h^q
  GroupDescriptor D, M, S, N;
};

// canonical diagonal torus D, monomial group M = D<a>, Singer cycle S = <h>
// and its normalizer N = <h, b>; q <= 1024
StandardSubgroups standard_subgroups(const Field& F);

// all invertible matrices in canonical order; q <= 13
std::vector<Mat> gl2_elements(const Field& F);

// search the ambient list for g with g H g^-1 = K
std::optional<Mat> is_conjugate_subgroup(std::span<const Mat> ambient,
                                         const MatGroup& H, const MatGroup& K);
// same, streaming over all of GL(2,q) (q <= 13)
std::optional<Mat> is_conjugate_in_gl(const MatGroup& H, const MatGroup& K);

}  // namespace gl2cc

#endif
