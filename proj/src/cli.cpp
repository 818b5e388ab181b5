#include "gl2cc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "gl2cc/json_io.hpp"

namespace gl2cc {
namespace {

Field field_of(i64 q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  auto factors = factorize(q);
  if (factors.size() != 1)
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  return Field(factors[0].first, factors[0].second);
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

int cmd_count(i64 q, i64 m, const std::string& shape_json) {
  Field F = field_of(q);
  if (!shape_json.empty()) {
    AbelianShape shape;
    try {
      shape = shape_from_json(parse_json_arg(shape_json, "--shape"));
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("--shape: ") + e.what());
    }
    if (shape.order() != m)
      throw std::invalid_argument("--shape has order " +
                                  std::to_string(shape.order()) +
                                  ", but --m is " + std::to_string(m));
    std::cout << count_to_json(count_reducible(F, shape)).dump() << "\n";
    return 0;
  }

  json reducible = json::array();
  for (const AbelianShape& shape : abelian_shapes_of(m)) {
    json entry = count_to_json(count_reducible(F, shape));
    entry["shape"] = shape_to_json(shape);
    reducible.push_back(std::move(entry));
  }
  json imprimitive = json::array();
  for (const ImprimitiveSpec& spec : imprimitive_specs(F, m))
    imprimitive.push_back(json{{"type", spec.label()}, {"count", 1}});
  json primitive = json::array();
  for (const PrimitiveSpec& spec : primitive_specs(F, m))
    primitive.push_back(json{{"type", spec.label()}, {"count", 1}});

  const ClassTotals totals = count_all_classes(F, m);
  json out{{"q", q},
           {"m", m},
           {"field", field_to_json(F)},
           {"reducible", std::move(reducible)},
           {"imprimitive", std::move(imprimitive)},
           {"primitive", std::move(primitive)},
           {"totals",
            json{{"reducible", totals.reducible},
                 {"imprimitive", totals.imprimitive},
                 {"primitive", totals.primitive},
                 {"all", totals.total()}}},
           {"note",
            "imprimitive and primitive types contribute one class each; "
            "run reps or verify for explicit witnesses"}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_reps(i64 q, i64 m, const std::string& geo,
             const std::string& out_file) {
  Field F = field_of(q);
  const bool want_red = geo.empty() || geo == "reducible";
  const bool want_imp = geo.empty() || geo == "imprimitive";
  const bool want_prim = geo.empty() || geo == "primitive";

  json entries = json::array(), warnings = json::array();
  if (want_red)
    for (const AbelianShape& shape : abelian_shapes_of(m))
      for (const Representative& rep : reducible_reps(F, shape))
        entries.push_back(representative_to_json(rep));
  if (want_imp)
    for (const ImprimitiveSpec& spec : imprimitive_specs(F, m)) {
      try {
        const json cons = imprimitive_construction(spec);
        entries.push_back(
            representative_to_json(imprimitive_rep(F, spec), &cons));
      } catch (const std::logic_error& e) {
        warnings.push_back(json{{"type", spec.label()}, {"warning", e.what()}});
      }
    }
  if (want_prim)
    for (const PrimitiveSpec& spec : primitive_specs(F, m)) {
      try {
        const json cons = primitive_construction(spec);
        entries.push_back(
            representative_to_json(primitive_rep(F, spec), &cons));
      } catch (const std::logic_error& e) {
        warnings.push_back(json{{"type", spec.label()}, {"warning", e.what()}});
      }
    }
  if (!geo.empty() && entries.empty() && warnings.empty())
    warnings.push_back(
        json{{"warning", "no " + geo + " class has order " +
                             std::to_string(m) + " at q = " +
                             std::to_string(q)}});

  json out{{"q", q},
           {"m", m},
           {"field", field_to_json(F)},
           {"entries", std::move(entries)},
           {"warnings", std::move(warnings)}};
  if (out_file.empty()) {
    std::cout << out.dump() << "\n";
  } else {
    std::ofstream f(out_file);
    if (!f) throw std::invalid_argument("cannot open " + out_file);
    f << out.dump() << "\n";
    std::cerr << "wrote " << out["entries"].size() << " entries to "
              << out_file << "\n";
  }
  return 0;
}

int cmd_verify(i64 q, i64 max_m, bool extended) {
  Field F = field_of(q);
  OracleOptions opts;
  opts.extended = extended;
  const VerifyReport report = verify_orders(F, max_m, opts);
  std::cout << report_table(report);
  std::cout << report_to_json(report).dump() << "\n";
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "conjugacy classes of solvable cube-free subgroups of GL(2,q) of "
      "order prime to q"};
  app.require_subcommand(1);

  i64 q = 0, m = 0, max_m = 24;
  std::string shape_json, geo, out_file;
  bool extended = false;

  CLI::App* count =
      app.add_subcommand("count", "class counts per isomorphism type");
  count->add_option("--q", q, "field size, a prime power")->required();
  count->add_option("--m", m, "group order, cube-free and prime to q")
      ->required();
  count->add_option(
      "--shape", shape_json,
      "one isomorphism type as JSON {m, sylows: [{p, beta, kind}]}");

  CLI::App* reps = app.add_subcommand(
      "reps", "explicit generator matrices, one subgroup per class");
  reps->add_option("--q", q, "field size, a prime power")->required();
  reps->add_option("--m", m, "group order, cube-free and prime to q")
      ->required();
  reps->add_option("--geo", geo, "restrict to one geometry")
      ->check(CLI::IsMember({"reducible", "imprimitive", "primitive"}));
  reps->add_option("--out", out_file,
                   "write JSON here instead of standard output");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the class formulas against exhaustive enumeration");
  verify->add_option("--q", q, "field size, a prime power")->required();
  verify->add_option("--max-m", max_m, "largest order to check (default 24)");
  verify->add_flag("--extended", extended,
                   "raise the enumeration cap from q <= 11 to q <= 13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(count)) return cmd_count(q, m, shape_json);
    if (app.got_subcommand(reps)) return cmd_reps(q, m, geo, out_file);
    return cmd_verify(q, max_m, extended);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gl2cc
