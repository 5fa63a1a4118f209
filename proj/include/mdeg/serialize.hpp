#pragma once

// JSON forms of the domain values. Every integer is a decimal string.

#include "json.hpp"
#include "mdeg/parser.hpp"
#include "mdeg/witness.hpp"

namespace mdeg {

using Json = nlohmann::ordered_json;

Json to_json(const DegreeFamily& family);
Json to_json(const FourForms& forms);
Json to_json(const MapRecipe& recipe);
Json to_json(const ParseError& error);
Json to_json(const FactorVerdict& row);
Json decisions_json(const Verdict& verdict);
Json to_json(const WitnessPackage& witness);

/// 64-bit FNV-1a of the compact recipe serialization, as 16 hex digits.
std::string recipe_digest(const MapRecipe& recipe);

}  // namespace mdeg
