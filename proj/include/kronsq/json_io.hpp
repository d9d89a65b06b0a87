#pragma once

#include "kronsq/piecewise.hpp"
#include "kronsq/poly.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace kronsq {

using Json = nlohmann::ordered_json;

// {"vars":[key...],"terms":[{"c":"num/den","e":[...]}...]}
Json poly_to_json(const MultiPoly& p);
// weight_of maps a variable key back to its weight.
MultiPoly poly_from_json(const Json& j, const std::function<int(const std::string&)>& weight_of);

// {"breaks":["0",...,"inf"],"pieces":[["c0","c1",...],...]}
Json ppf_to_json(const PiecewisePoly& p);
PiecewisePoly ppf_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);

}  // namespace kronsq
