#include "gl2cc/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl2cc/classifier.hpp"

namespace gl2cc {

json field_to_json(const Field& F) {
  return json{{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

json felem_to_json(const Field& F, FElem x) {
  if (F.k() == 1) return json(F.coeffs(x)[0]);
  return json(F.coeffs(x));
}

FElem felem_from_json(const Field& F, const json& j) {
  if (j.is_number_integer()) {
    if (F.k() != 1)
      throw std::invalid_argument(
          "field element: expected an array of " + std::to_string(F.k()) +
          " coefficients");
    return F.from_coeffs({j.get<i64>()});
  }
  if (!j.is_array())
    throw std::invalid_argument("field element: expected integer or array");
  return F.from_coeffs(j.get<std::vector<i64>>());
}

json mat_to_json(const Field& F, const Mat& m) {
  return json::array(
      {json::array({felem_to_json(F, m.e11), felem_to_json(F, m.e12)}),
       json::array({felem_to_json(F, m.e21), felem_to_json(F, m.e22)})});
}

Mat mat_from_json(const Field& F, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument("matrix: expected [[e11,e12],[e21,e22]]");
  return Mat{felem_from_json(F, j[0][0]), felem_from_json(F, j[0][1]),
             felem_from_json(F, j[1][0]), felem_from_json(F, j[1][1])};
}

json group_to_json(const MatGroup& G) {
  json gens = json::array();
  for (const Mat& g : G.generators()) gens.push_back(mat_to_json(G.field(), g));
  return json{{"order", G.order()}, {"generators", std::move(gens)}};
}

json shape_to_json(const AbelianShape& shape) {
  json sylows = json::array();
  for (const SylowShape& s : shape.sylows)
    sylows.push_back(json{{"p", s.prime},
                          {"beta", s.beta},
                          {"kind", s.cyclic ? "Cyclic" : "ElementaryAbelian"}});
  return json{{"m", shape.order()}, {"sylows", std::move(sylows)}};
}

AbelianShape shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sylows"))
    throw std::invalid_argument("shape: expected {m, sylows: [...]}");
  AbelianShape shape;
  for (const json& s : j.at("sylows")) {
    SylowShape layer;
    layer.prime = s.at("p").get<i64>();
    layer.beta = s.at("beta").get<int>();
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "Cyclic")
      layer.cyclic = true;
    else if (kind == "ElementaryAbelian")
      layer.cyclic = false;
    else
      throw std::invalid_argument("shape: unknown Sylow kind \"" + kind + "\"");
    if (!is_prime(layer.prime))
      throw std::invalid_argument("shape: " + std::to_string(layer.prime) +
                                  " is not prime");
    if (layer.beta < 1 || layer.beta > 2)
      throw std::invalid_argument("shape: beta must be 1 or 2");
    if (!layer.cyclic && layer.beta != 2)
      throw std::invalid_argument(
          "shape: elementary abelian layers have beta = 2");
    shape.sylows.push_back(layer);
  }
  std::sort(shape.sylows.begin(), shape.sylows.end(),
            [](const SylowShape& a, const SylowShape& b) {
              return a.prime < b.prime;
            });
  for (std::size_t i = 1; i < shape.sylows.size(); ++i)
    if (shape.sylows[i].prime == shape.sylows[i - 1].prime)
      throw std::invalid_argument("shape: repeated prime " +
                                  std::to_string(shape.sylows[i].prime));
  if (j.contains("m") && j.at("m").get<i64>() != shape.order())
    throw std::invalid_argument("shape: m does not match the sylow layers");
  return shape;
}

json count_to_json(const CountResult& c) {
  return json{{"rho", c.rho},
              {"delta", c.delta},
              {"count", c.count},
              {"realizable", c.realizable}};
}

json imprimitive_construction(const ImprimitiveSpec& spec) {
  json torus = json::array();
  for (const OddLayer& l : spec.layers) {
    const char* role = l.role == TorusRole::Central    ? "central"
                       : l.role == TorusRole::Inverted ? "inverted"
                                                       : "split";
    torus.push_back(json{{"p", l.prime}, {"beta", l.beta}, {"role", role}});
  }
  return json{{"label", spec.label()},
              {"torus", std::move(torus)},
              {"minus_one", spec.has_minus_one},
              {"reflected_order", spec.p_order}};
}

json primitive_construction(const PrimitiveSpec& spec) {
  const char* kind = nullptr;
  switch (spec.kind) {
    case PrimitiveKind::Cyclic: kind = "cyclic"; break;
    case PrimitiveKind::Involution: kind = "involution"; break;
    case PrimitiveKind::Order4: kind = "order4"; break;
    case PrimitiveKind::Klein: kind = "klein"; break;
  }
  return json{{"label", spec.label()}, {"kind", kind}, {"cycle_order", spec.s}};
}

json representative_to_json(const Representative& rep,
                            const json* construction) {
  const Field& F = rep.group.field();
  json shape = shape_to_json(sylow_fingerprint(rep.group));
  shape["geo"] = geometry_name(rep.geometry);
  if (rep.geometry != Geometry::Reducible)
    shape["witness"] = group_to_json(rep.group);
  json gens = json::array();
  for (const Mat& g : rep.generators) gens.push_back(mat_to_json(F, g));
  json out{{"shape", std::move(shape)},
           {"generators", std::move(gens)},
           {"order", rep.group.order()},
           {"geo", geometry_name(rep.geometry)},
           {"type", rep.type_label}};
  if (construction) out["construction"] = *construction;
  return out;
}

json report_to_json(const VerifyReport& report) {
  json rows = json::array();
  for (const VerifyRow& r : report.rows) {
    json row{{"m", r.m},
             {"type", r.type},
             {"geometry", r.geometry},
             {"formula", r.formula < 0 ? json() : json(r.formula)},
             {"oracle", r.enumerated}};
    switch (r.status) {
      case RowStatus::Ok: row["status"] = "ok"; break;
      case RowStatus::Fail: row["status"] = "FAIL"; break;
      case RowStatus::Excluded: row["status"] = "excluded"; break;
    }
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  return json{
      {"q", report.q}, {"all_agree", report.all_ok()}, {"rows", std::move(rows)}};
}

}  // namespace gl2cc
