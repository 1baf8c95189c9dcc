#pragma once

#include <string>

#include <json.hpp>

#include "chshlab/behavior.hpp"
#include "chshlab/lhv.hpp"
#include "chshlab/quantum.hpp"

namespace chshlab {

using json = nlohmann::json;

// Behavior:        {"probs": [16 numbers in (a, b, A, B) order, +1 first], "labels": {...}}
// LhvModel:        {"weights": [...], "responses": [{"A": [+-1, +-1], "B": [+-1, +-1]}, ...]}
// QuantumStrategy: {"state": [[re, im] x4], "settings": {"a": [x,y,z], "a_prime": ..., "b": ..., "b_prime": ...}}
// Parsing is strict: unknown keys and wrong shapes raise ValidationError.

struct LabeledBehavior {
  Behavior behavior;
  ChshLabels labels;
};

LabeledBehavior behavior_from_json(const json& j);
json behavior_to_json(const Behavior& b, const ChshLabels& labels = {});

LhvModel lhv_from_json(const json& j);
json lhv_to_json(const LhvModel& m);

TwoQubitState state_from_json(const json& j);
json state_to_json(const TwoQubitState& s);
MeasurementSettings settings_from_json(const json& j);
json settings_to_json(const MeasurementSettings& s);

QuantumStrategy strategy_from_json(const json& j);
json strategy_to_json(const QuantumStrategy& s);

enum class ModelKind { behavior, lhv, quantum };

/// Classifies a model document by its top-level keys.
ModelKind detect_model_kind(const json& j);

/// Reads and parses a JSON file; IoError if unreadable, ValidationError if malformed.
json load_json_file(const std::string& path);

}  // namespace chshlab
