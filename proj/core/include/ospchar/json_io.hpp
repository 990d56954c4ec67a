#pragma once

#include <nlohmann/json.hpp>

#include "ospchar/character_sum.hpp"
#include "ospchar/monomial.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/verify.hpp"
#include "ospchar/weyl.hpp"

namespace ospchar {

// Partitions serialize as plain arrays of parts; the empty partition is [].
nlohmann::json to_json(const Partition& p);

// {"m":..,"n":..,"terms":[{"exp":[..],"coef":"<decimal>"},..]} with terms in
// lexicographic exponent order.  Coefficients are decimal strings so they
// survive arbitrary magnitude.
nlohmann::json to_json(const MonomialExpansion& e);

// MonomialExpansion layout plus "shift2".
nlohmann::json to_json(const ShiftedCharacter& c);

// {"family":..,"params":{..},"shift2":[..],"cutoff":..,"labels":[[..],..]}
// with labels in (weight, lex) order and null cutoff for finite families.
nlohmann::json to_json(const CharacterSum& cs);

// {"cutoff":D,"coeffs":["c0",..,"cD"]}.
nlohmann::json to_json(const TruncatedSeries& s);

// One report line; pass include_ms = false for byte-stable output.
nlohmann::json to_json(const VerificationReport& report, bool include_ms = true);

} // namespace ospchar
