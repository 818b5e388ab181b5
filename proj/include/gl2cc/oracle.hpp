#ifndef GL2CC_ORACLE_HPP_
#define GL2CC_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gl2cc/matgroup.hpp"

namespace gl2cc {

struct OracleOptions {
  bool extended = false;  // allow q up to 13 instead of 11
};

// Exhaustive subgroup enumeration for one GL(2,q), independent of any
// counting formula. Subgroups of cube-free order are grown bottom-up:
// every such group has a subnormal chain with prime indices over its
// perfect core, so prime-index extensions from the trivial group plus
// the perfect seeds reach everything. Layers are cached per order.
class Oracle {
 public:
  explicit Oracle(const Field& F, OracleOptions opts = {});

  const Field& field() const { return F_; }
  const std::vector<Mat>& ambient() const { return gl_; }

  // all subgroups of the given cube-free order, sorted by element set;
  // throws when the order is not cube-free
  std::vector<MatGroup> subgroups_of_order(i64 m);

  // conjugacy classes as position lists into `groups`, canonical member
  // first, classes ordered by canonical member; requires the input to be
  // conjugation-closed and throws when some conjugate is missing
  std::vector<std::vector<std::size_t>> classes_of(
      const std::vector<MatGroup>& groups) const;

 private:
  using Elems = std::vector<std::int32_t>;  // sorted ambient positions
  struct Sub {
    Elems elems, gens;
  };

  std::int32_t index_of(const Mat& m) const;
  const Mat& at(std::int32_t i) const { return gl_[(std::size_t)i]; }
  const std::vector<Sub>& layer(i64 d);
  void extend_layer(const std::vector<Sub>& parents, i64 p,
                    std::set<Elems>& seen, std::vector<Sub>& out);
  void seed_perfect(std::set<Elems>& seen, std::vector<Sub>& out);

  const Field& F_;
  OracleOptions opts_;
  std::vector<Mat> gl_;
  std::vector<std::uint64_t> codes_;
  std::vector<i64> orders_;
  std::map<i64, std::vector<Sub>> layers_;
};

// one-shot wrappers
std::vector<MatGroup> all_subgroups_of_order(const Field& F, i64 m,
                                             OracleOptions opts = {});
std::vector<std::vector<std::size_t>> conjugacy_classes(
    const Field& F, const std::vector<MatGroup>& groups);

}  // namespace gl2cc

#endif
