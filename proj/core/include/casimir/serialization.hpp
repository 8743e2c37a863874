#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "casimir/character.hpp"
#include "casimir/ideal_poset.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
/// Throws std::invalid_argument unless j is an integer array of length rank.
Weight weight_from_json(const Json& j, int rank);

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json bigint_to_json(const BigInt& v);

/// {"type": "A2", "lambda": [1,1], "entries": [[[c1,...,cl], mult], ...]}
/// with entries sorted by coordinates.
Json character_to_json(const Character& chi, const Weight& lambda);

/// Inverse of character_to_json. Throws std::invalid_argument when the type
/// does not match rs or the document is malformed.
Character character_from_json(const RootSystem& rs, const Json& j, Weight* lambda = nullptr);

/// "A2_1_1.json"
std::string character_file_name(const CartanType& type, const Weight& lambda);

/// Member roots as sorted simple-root coordinate vectors.
Json ideal_to_json(const RootSystem& rs, const NilIdeal& ideal);

/// {"i": 4, "m": "8/3", "components": [{"weight": [2,2], "mult": 2, "dim": 27}],
///  "dim": 54, "strategies": ["IDEAL", "CHARACTER"]}
Json row_to_json(const SpectrumRow& row);

/// Per-type report with the check list and the spectrum rows.
Json report_to_json(const VerificationReport& report);

}  // namespace casimir
