#pragma once

#include <json.hpp>

#include "braids/garside.hpp"
#include "braids/report.hpp"
#include "braids/simplex.hpp"

namespace braids {

using Json = nlohmann::ordered_json;

// Scalars: Laurent polynomials as term lists with decimal-string
// coefficients, rationals as decimal strings, floats as numbers.
Json to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

std::string mpq_str(const mpq_class& x);
mpq_class mpq_from_str(const std::string& s);  // "3", "-3/4" or "0.75"

Json to_json(const SymMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const FloatMatrix& m);
SymMatrix sym_matrix_from_json(const Json& j);

Json to_json(Edge e);  // [i, j]
Edge edge_from_json(const Json& j, int n);

Json to_json(const NCPartition& p);
NCPartition partition_from_json(const Json& j);

Json to_json(const RatNorms& v);
Json to_json(const FloatNorms& v);
RatNorms rat_norms_from_json(const Json& j);

Json to_json(const Report& r);

}  // namespace braids
