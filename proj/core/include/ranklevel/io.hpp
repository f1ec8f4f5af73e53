#pragma once

#include <string>

#include "ranklevel/diagram.hpp"
#include "ranklevel/duality.hpp"

namespace ranklevel {

// "a_1,a_2,...,a_r" with zeros kept; the empty string is the empty diagram.
// Lossless against YoungDiagram::to_text given the ambient (rows, level).
YoungDiagram parse_diagram(const std::string& text, int rows, int level);

/*
 * Weight-system JSON: either a bare array of diagram strings (the rectangle
 * comes from the caller) or an object {"r": .., "l": .., "n": ..,
 * "diagrams": [..]}.  Serialization always emits the object form and
 * round-trips losslessly.
 */
WeightSystem parse_weight_system(const std::string& json_text, int rows, int level);
std::string weight_system_to_json(const WeightSystem& w);

std::string instance_to_json(const DualityInstance& inst);
DualityInstance parse_instance(const std::string& json_text);

std::string plan_to_json(const NormalizationPlan& plan);
NormalizationPlan parse_plan(const std::string& json_text);

}  // namespace ranklevel
