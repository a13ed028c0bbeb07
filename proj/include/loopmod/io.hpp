#pragma once

#include <string>
#include <vector>

#include "loopmod/charformula.hpp"
#include "loopmod/crystal.hpp"
#include "loopmod/drinfeld.hpp"
#include "loopmod/loopdecomp.hpp"

#include "json.hpp"

namespace loopmod {

using Json = nlohmann::json;

enum class Format { Json, Csv, Dot };
Format parse_format(const std::string& name);

// Parse an exact scalar expression over +, -, *, /, ^, parentheses, integer
// literals and the symbols q and z (= zeta of the given order).
FieldElem parse_field_elem(const std::string& text, unsigned zeta_order);

// Tuple text format: "roots: [[1,-1],[...]]" (factored) or
// "coeffs: [[1,0,-1],...]" (constant term first). '#' starts a comment.
DrinfeldTuple parse_tuple(const std::string& text, unsigned zeta_order);

Json decomposition_to_json(const DecompositionReport& report);
Json comparison_to_json(const ComparisonReport& report);
std::string comparison_to_csv(const ComparisonReport& report);
Json crystal_to_json(const CrystalGraph& graph);
std::string crystal_to_dot(const CrystalGraph& graph);
Json axioms_to_json(const AxiomReport& report);

// Bit-stable serialization: sorted keys, fixed indentation, LF endings.
std::string render_json(const Json& j);

}  // namespace loopmod
