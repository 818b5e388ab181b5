#ifndef GL2CC_JSON_IO_HPP_
#define GL2CC_JSON_IO_HPP_

#include <json.hpp>

#include "gl2cc/counting.hpp"
#include "gl2cc/representatives.hpp"
#include "gl2cc/verify.hpp"

namespace gl2cc {

using nlohmann::json;

// {p, k, modulus: [c0..ck]}
json field_to_json(const Field& F);

// prime fields print elements as bare residues; extension fields as
// coefficient arrays of length k, x^0 first
json felem_to_json(const Field& F, FElem x);
FElem felem_from_json(const Field& F, const json& j);

// [[e11, e12], [e21, e22]]
json mat_to_json(const Field& F, const Mat& m);
Mat mat_from_json(const Field& F, const json& j);

// {order, generators: [Mat...]}; the element set is never serialized
json group_to_json(const MatGroup& G);

// {m, sylows: [{p, beta, kind}]} with kind "Cyclic" or "ElementaryAbelian"
json shape_to_json(const AbelianShape& shape);
// validates primes, exponents, and the m field when present
AbelianShape shape_from_json(const json& j);

// {rho, delta, count, realizable}
json count_to_json(const CountResult& c);

// construction metadata for reps built from an explicit recipe
json imprimitive_construction(const ImprimitiveSpec& spec);
json primitive_construction(const PrimitiveSpec& spec);

// {shape: {m, sylows, geo, witness?}, generators, order, geo, type,
//  construction?}; the witness subgroup rides along for the non-diagonal
// geometries, where Sylow kinds alone do not pin the isomorphism type
json representative_to_json(const Representative& rep,
                            const json* construction = nullptr);

// {q, all_agree, rows: [{m, type, geometry, formula, oracle, status, note?}]}
json report_to_json(const VerifyReport& report);

}  // namespace gl2cc

#endif
