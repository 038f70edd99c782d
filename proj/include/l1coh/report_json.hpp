#pragma once

#include <string>

#include <json.hpp>

#include "l1coh/bounds.hpp"
#include "l1coh/coherence.hpp"

namespace l1coh {

using ordered_json = nlohmann::ordered_json;

// {"bound", "applicable", "conditions", "rhs", "lhs", "gap", "coefficients", "dropped"}
ordered_json to_json(const BoundReport& rep);
ordered_json to_json(const CoherenceProfile& prof);
ordered_json to_json(const BoundParams& params);

// Shortest decimal that parses back to the same double ("nan", "inf" for
// non-finite values).
std::string format_double(double v);

} // namespace l1coh
