#pragma once

#include <json.hpp>

#include "fibspec/cantor_metrics.hpp"
#include "fibspec/interval_set.hpp"
#include "fibspec/spectrum.hpp"
#include "fibspec/transfer_matrix.hpp"

namespace fibspec {

// ordered_json keeps insertion order, so identical runs serialize to
// identical bytes; doubles print as shortest round-trip decimals.
using json = nlohmann::ordered_json;

json to_json(const IntervalSet& a);
IntervalSet interval_set_from_json(const json& j);

json to_json(const Model& m);
Model model_from_json(const json& j);  // accepts {"lambda": x} shortcut

json to_json(const SpectrumApproximant& s);
SpectrumApproximant approximant_from_json(const json& j);

// tau = +inf serializes as the string "inf".
json tau_to_json(double tau);
double tau_from_json(const json& j);

json to_json(const ThicknessReport& r);
json to_json(const DimensionEstimate& d);
DimensionEstimate dimension_from_json(const json& j);

}  // namespace fibspec
