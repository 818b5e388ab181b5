#include "gl2cc/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "gl2cc/classifier.hpp"
#include "gl2cc/counting.hpp"
#include "gl2cc/numeric.hpp"

namespace gl2cc {

bool VerifyReport::all_ok() const { return failures() == 0; }

i64 VerifyReport::failures() const {
  i64 n = 0;
  for (const VerifyRow& r : rows)
    if (r.status == RowStatus::Fail) ++n;
  return n;
}

std::vector<VerifyRow> verify_order(const Field& F, Oracle& oracle, i64 m) {
  std::vector<VerifyRow> rows;
  auto subs = oracle.subgroups_of_order(m);
  auto classes = oracle.classes_of(subs);

  if (m % F.p() == 0) {
    rows.push_back({m, "order " + std::to_string(m), "-", -1,
                    static_cast<i64>(classes.size()), RowStatus::Excluded,
                    "order shares a factor with q"});
    for (const auto& cls : classes) {
      const MatGroup& K = subs[cls[0]];
      if (!is_solvable(K))
        rows.push_back({m, shape_label(sylow_fingerprint(K)),
                        geometry_name(classify(K)), -1, 1, RowStatus::Excluded,
                        "non-solvable"});
    }
    return rows;
  }

  std::map<std::string, i64> reducible_seen;
  std::vector<const MatGroup*> imp, prim;
  for (const auto& cls : classes) {
    const MatGroup& K = subs[cls[0]];
    if (!is_solvable(K)) {
      rows.push_back({m, shape_label(sylow_fingerprint(K)),
                      geometry_name(classify(K)), -1, 1, RowStatus::Excluded,
                      "non-solvable"});
      continue;
    }
    switch (classify(K)) {
      case Geometry::Reducible:
        ++reducible_seen[shape_label(sylow_fingerprint(K))];
        break;
      case Geometry::Imprimitive:
        imp.push_back(&K);
        break;
      case Geometry::Primitive:
        prim.push_back(&K);
        break;
    }
  }

  for (const AbelianShape& shape : abelian_shapes_of(m)) {
    const std::string label = shape_label(shape);
    const i64 formula = count_reducible(F, shape).count;
    const i64 seen = reducible_seen.count(label) ? reducible_seen[label] : 0;
    reducible_seen.erase(label);
    if (formula == 0 && seen == 0) continue;
    rows.push_back({m, label, "reducible", formula, seen,
                    formula == seen ? RowStatus::Ok : RowStatus::Fail, ""});
  }
  for (const auto& [label, seen] : reducible_seen)
    rows.push_back({m, label, "reducible", 0, seen, RowStatus::Fail,
                    "class outside the shape list"});

  // one row per construction; each must absorb exactly one enumerated class
  std::vector<char> imp_hit(imp.size(), 0), prim_hit(prim.size(), 0);
  for (const ImprimitiveSpec& spec : imprimitive_specs(F, m)) {
    const Representative rep = imprimitive_rep(F, spec);
    i64 seen = 0;
    for (std::size_t i = 0; i < imp.size(); ++i)
      if (is_conjugate_in_gl(rep.group, *imp[i])) {
        imp_hit[i] = 1;
        ++seen;
      }
    rows.push_back({m, spec.label(), "imprimitive", 1, seen,
                    seen == 1 ? RowStatus::Ok : RowStatus::Fail, ""});
  }
  for (const PrimitiveSpec& spec : primitive_specs(F, m)) {
    const Representative rep = primitive_rep(F, spec);
    i64 seen = 0;
    for (std::size_t i = 0; i < prim.size(); ++i)
      if (is_conjugate_in_gl(rep.group, *prim[i])) {
        prim_hit[i] = 1;
        ++seen;
      }
    rows.push_back({m, spec.label(), "primitive", 1, seen,
                    seen == 1 ? RowStatus::Ok : RowStatus::Fail, ""});
  }
  for (std::size_t i = 0; i < imp.size(); ++i)
    if (!imp_hit[i])
      rows.push_back({m, shape_label(sylow_fingerprint(*imp[i])),
                      "imprimitive", 0, 1, RowStatus::Fail,
                      "no construction matches"});
  for (std::size_t i = 0; i < prim.size(); ++i)
    if (!prim_hit[i])
      rows.push_back({m, shape_label(sylow_fingerprint(*prim[i])),
                      "primitive", 0, 1, RowStatus::Fail,
                      "no construction matches"});
  return rows;
}

VerifyReport verify_orders(const Field& F, i64 max_m, OracleOptions opts) {
  VerifyReport report;
  report.q = F.q();
  Oracle oracle(F, opts);
  for (i64 m = 1; m <= max_m; ++m) {
    if (!is_cube_free_order(m)) continue;
    for (VerifyRow& row : verify_order(F, oracle, m))
      report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_table(const VerifyReport& report) {
  std::ostringstream out;
  out << std::setw(4) << "q" << std::setw(5) << "m" << "  " << std::left
      << std::setw(16) << "type" << std::setw(13) << "geometry" << std::right
      << std::setw(8) << "formula" << std::setw(7) << "oracle"
      << "  status\n";
  for (const VerifyRow& r : report.rows) {
    out << std::setw(4) << report.q << std::setw(5) << r.m << "  " << std::left
        << std::setw(16) << r.type << std::setw(13) << r.geometry
        << std::right << std::setw(8);
    if (r.formula < 0)
      out << "-";
    else
      out << r.formula;
    out << std::setw(7) << r.enumerated << "  ";
    switch (r.status) {
      case RowStatus::Ok: out << "ok"; break;
      case RowStatus::Fail: out << "FAIL"; break;
      case RowStatus::Excluded: out << "excluded"; break;
    }
    if (!r.note.empty()) out << ": " << r.note;
    out << "\n";
  }
  if (report.all_ok())
    out << "all rows agree\n";
  else
    out << report.failures() << " row(s) FAILED\n";
  return out.str();
}

}  // namespace gl2cc
