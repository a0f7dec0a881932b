#pragma once

#include <nlohmann/json.hpp>

#include "forge/anomaly.hpp"
#include "forge/construction.hpp"
#include "forge/elliptic.hpp"
#include "forge/field.hpp"
#include "forge/poly.hpp"

namespace forge::io {

using nlohmann::json;

/// Constant term first.
json to_json(const PolyQ& p);
/// {"m0": int, "coeffs": [a0, a1, a2]}; rationals embed with m0 = 1.
json to_json(const RadicalElem& u);
json radical_json(const Rat& q);
json to_json(const PrimeReport& r);
json to_json(const AscentRecord& rec);
json to_json(const CorrelationRow& row);
json to_json(const PatternRow& row);
json to_json(const ConditionReport& report);

/// JSON integers when the value fits in 64 bits, decimal strings otherwise.
json int_json(const Int& n);

}  // namespace forge::io
