#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "paley/cr_norm.hpp"
#include "paley/orchestrator.hpp"
#include "paley/riesz.hpp"

namespace paley {

using json = nlohmann::json;

// Keys sorted, floats as %.17g, non-finite floats as null. indent < 0 gives
// one line.
std::string canonical_dump(const json& j, int indent = -1);

// Integers that fit int64 are numbers, larger ones decimal strings.
json to_json(const Integer& v);
// "p/q" (or "p" when q = 1).
json to_json(const Rational& v);
json to_json(const Frequency& n);
json to_json(const std::vector<Frequency>& ns);
json to_json(const MultiIndex& g);
json to_json(const Smoothness& s);
json to_json(cplx z);
json to_json(const PropertyOWitness& w);
json to_json(const ConditionReport& r);
json to_json(const LacunaryPlan& plan);
json to_json(const TrigPoly& f);
json to_json(const PaleyEstimate& e);
json to_json(const CrResult& r);
json to_json(const TechpropValues& v);
json to_json(const RhoEstimate& r);
json to_json(const ConstructionConfig& c);
json to_json(const ConstructionReport& r);

// Parsers throw Errc::parse on malformed input and propagate the
// validation errors of the constructed objects.
Integer integer_from_json(const json& j);
Frequency frequency_from_json(const json& j);
MultiIndex multiindex_from_json(const json& j);
Smoothness smoothness_from_json(const json& j);
TrigPoly trigpoly_from_json(const json& j);
// Array of square matrices; each matrix an array of rows, each entry a
// number or [re, im].
MatrixSequence matrix_sequence_from_json(const json& j);
json parse_json(const std::string& text);

}  // namespace paley
