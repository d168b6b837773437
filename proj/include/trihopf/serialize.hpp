#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "trihopf/hopf.hpp"

namespace trihopf {

using Json = nlohmann::json;

// Rationals as strings ("3", "-1/2"); other scalars as {"conductor": N, "coeffs": [...]}
// in the power basis of Q(zeta_N).
Json scalar_to_json(const Cyclotomic& c);
Cyclotomic scalar_from_json(const Json& j, const std::string& where);

// {"dims": [d1, d2], "entries": [[i, j, c], ...]}
Json tensor_to_json(const Tensor2& t);
Tensor2 tensor_from_json(const Json& j, const std::string& where);

Json vec_to_json(const Vec& v);  // sparse [[i, c], ...]
Vec vec_from_json(const Json& j, int dim, const std::string& where);

// Flat sparse lists: "products" [[i, j, k, c]] for e_i e_j, "coproduct" [[k, i, j, c]],
// "antipode" [[row, col, c]], plus "unit", "counit" and an optional "parity".
Json hopf_to_json(const HopfPresentation& h);
HopfPresentation hopf_from_json(const Json& j, const std::string& where);

// Cayley table rows, optional element names.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, const std::string& where);

Json report_to_json(const Report& r);

// UsageError naming the path and the byte offset of a parse error.
Json load_json_file(const std::string& path);

}  // namespace trihopf
