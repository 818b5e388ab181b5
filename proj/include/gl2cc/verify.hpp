#ifndef GL2CC_VERIFY_HPP_
#define GL2CC_VERIFY_HPP_

#include <string>
#include <vector>

#include "gl2cc/oracle.hpp"
#include "gl2cc/representatives.hpp"

namespace gl2cc {

enum class RowStatus { Ok, Fail, Excluded };

// one comparison line: a single isomorphism type inside one order
struct VerifyRow {
  i64 m = 0;
  std::string type;      // shape label or construction label
  std::string geometry;  // "reducible" / "imprimitive" / "primitive"
  i64 formula = -1;      // -1 on excluded rows
  i64 enumerated = 0;
  RowStatus status = RowStatus::Ok;
  std::string note;
};

struct VerifyReport {
  i64 q = 0;
  std::vector<VerifyRow> rows;
  bool all_ok() const;
  i64 failures() const;
};

// rows for one order m: every reducible type with a nonzero count on
// either side, one row per reflected or cycle-normalizer construction,
// excluded rows for orders sharing a factor with q and for non-solvable
// classes. The oracle is shared so divisor layers are computed once.
std::vector<VerifyRow> verify_order(const Field& F, Oracle& oracle, i64 m);

// all cube-free m <= max_m
VerifyReport verify_orders(const Field& F, i64 max_m, OracleOptions opts = {});

std::string report_table(const VerifyReport& report);

}  // namespace gl2cc

#endif
