#pragma once

#include "wittconics/conics.hpp"
#include "wittconics/hyperfield.hpp"
#include "wittconics/quadfields.hpp"

#include <json.hpp>

namespace wittconics {

using Json = nlohmann::json;

// Hyperfield file format: {elements, one, neg, mul, add}; index 0 is zero.
Json hyperfield_to_json(const FiniteHyperfield& H);

/// Throws std::invalid_argument with a location for malformed or non-total
/// tables.
FiniteHyperfield hyperfield_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& report);

Json ramification_to_json(const RamificationSet& ram);

Json point_to_json(const RationalPoint& pt);

// Certificates: {kind, data{...}, inputs{a,b,c,d}}; integers are encoded
// as decimal strings.
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json witness_set_to_json(const WitnessSet& ws);

Json class_group_to_json(const ClassGroupData& data);

std::string rat_str(const Rat& r);

} // namespace wittconics
