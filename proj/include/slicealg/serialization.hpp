#pragma once

#include <json.hpp>

#include "slicealg/cauchy.hpp"
#include "slicealg/zeros.hpp"

namespace slicealg {

using json = nlohmann::ordered_json;

/// Malformed input documents (wrong shape, missing fields).
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// {name, dim, basis, mul_table (dense d x d x d), conj (d x d)}; built-ins
/// round-trip bit-exactly through this format.
json algebra_to_json(const AlgebraSpec& spec);
AlgebraPtr algebra_from_json(const json& j);

json element_to_json(const Element& x);
Element element_from_json(const AlgebraPtr& a, const json& j);

/// Array of coefficient coordinate vectors, index = power of x.
json poly_to_json(const SlicePoly& p);
SlicePoly poly_from_json(const AlgebraPtr& a, const json& j);

json zero_record_to_json(const ZeroRecord& r);
json zero_records_to_json(const std::vector<ZeroRecord>& records);

/// {J, kind, center, radius, n_boundary, n_radial, n_angular}.
json contour_to_json(const ContourSpec& c);
ContourSpec contour_from_json(const AlgebraPtr& a, const json& j);

}  // namespace slicealg
