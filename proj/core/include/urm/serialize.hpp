#pragma once

#include <string_view>

#include <json.hpp>

#include "urm/constructive.hpp"
#include "urm/matching.hpp"
#include "urm/solvers.hpp"

namespace urm {

using Json = nlohmann::ordered_json;

/// "u-v" -> Edge; throws MatchingError on malformed text.
Edge parse_edge(std::string_view text);

/// Sorted array of "u-v" strings.
Json to_json(const Matching& m);
/// Accepts an array of "u-v" strings or of [u, v] pairs.
Matching matching_from_json(const Json& j);

/// {num, den}.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {value, optimal, witness, nodes, millis}.
Json to_json(const SolveResult& r);

Json to_json(const UrCheck& c);
Json to_json(const ReductionStep& s);
Json to_json(const ReductionTrace& t);

}  // namespace urm
