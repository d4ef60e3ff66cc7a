#pragma once

// JSON formats. Key order is fixed (ordered_json) so output is stable.
//
// Code format:
//   {"p":2, "e":1, "modulus":[0,1], "n":4, "l":2,
//    "blocks":[[[1,0,0,1],[0,1,1,1]], ...]}
// Blocks are RREF basis rows; elements use the integer encoding of field.hpp.
// Big numbers in reports are decimal strings.

#include <string>

#include "json.hpp"

#include "cdc/bounds.hpp"
#include "cdc/code.hpp"
#include "cdc/search.hpp"
#include "cdc/steiner.hpp"

namespace cdc {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& field);
// Throws ParseError on missing or mistyped keys; field errors propagate.
FieldSpec field_from_json(const Json& j);

Json code_to_json(const ConstantDimensionCode& code);
ConstantDimensionCode code_from_json(const Json& j);

// Code format plus "construction":
//   {"type":"cyclotomic_spread", "q", "l", "k", "modulus", "alpha"}
// where modulus and alpha describe GF(q^(kl)).
Json spread_to_json(const SpreadConstruction& spread);

Json bound_report_to_json(const BoundReport& report);

Json search_result_to_json(const SearchResult& result);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace cdc
