#pragma once

// JSON encodings. Rationals are "num/den" strings ("n" for integers).

#include <json.hpp>

#include "selmer/curve.hpp"
#include "selmer/densities.hpp"
#include "selmer/descent.hpp"
#include "selmer/quartic.hpp"

namespace selmer {

nlohmann::json to_json(const Rat& x);
nlohmann::json to_json(const Int& x);
/// {"exact": "n/d", "decimal": "..."} with `digits` decimal places.
nlohmann::json rat_with_decimal(const Rat& x, unsigned digits = 12);

Rat rat_from_json(const nlohmann::json& j);
Int int_from_json(const nlohmann::json& j);

/// [a, b, c, d, e] as strings.
nlohmann::json to_json(const BinaryQuartic& g);
BinaryQuartic quartic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantPair& ij);
/// {type, n, subtype, tamagawa}.
nlohmann::json to_json(const LocalReductionData& r);
nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const IntForm& f);
nlohmann::json to_json(const SelmerEstimate& e);
SelmerEstimate selmer_estimate_from_json(const nlohmann::json& j);

}  // namespace selmer
