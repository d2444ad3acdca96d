#pragma once

#include <json.hpp>

#include "waring/apolarity.hpp"
#include "waring/constructors.hpp"
#include "waring/hermite.hpp"
#include "waring/ranks.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

// Every rational crosses the interface as a "p/q" string, never a JSON number.

/// {"target": "...", "degree": d, "terms": [{"coeff": "p/q", "form": ["1", ...]}]}
Json to_json(const Decomposition& dec);

/// The decomposition schema plus "method", "size" and a "diagnostic" object.
Json to_json(const RealDecomposition& rd);

Json to_json(const RankReport& report);

/// {"dim", "signature": [p, m, z], "real_points", "complex_points"}
Json to_json(const PointCount& count);

/// Reads the decomposition schema; extra keys are ignored.
/// Throws ParseError on malformed or inconsistent input.
Decomposition decomposition_from_json(const Json& j);

/// Hermite-count input: {"generators": ["X1^3 + 1", ...], "a": [a1, ...], "a0": a0}.
/// Generators are written in X1..Xn (or x1..xn). Throws ParseError or
/// GapSystemError.
GapSystem gap_system_from_json(const Json& j);

}  // namespace waring
