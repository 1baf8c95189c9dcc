#include "chshlab/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "chshlab/errors.hpp"

namespace chshlab {

namespace {

void require_keys(const json& j, const char* what, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k)) throw ValidationError(std::string(what) + ": missing key \"" + k + "\"");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ValidationError(std::string(what) + ": unknown key \"" + item.key() + "\"");
    }
  }
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  return j.get<double>();
}

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n != 0 && j.size() != n)) {
    throw ValidationError(std::string(what) + ": expected an array" + (n ? " of length " + std::to_string(n) : ""));
  }
  return j;
}

Outcome outcome(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + ": responses must be +1 or -1");
  const auto v = j.get<long long>();
  if (v == 1) return Outcome::plus;
  if (v == -1) return Outcome::minus;
  throw ValidationError(std::string(what) + ": responses must be +1 or -1");
}

std::size_t setting_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1) {
    throw ValidationError(std::string(what) + ": label must be 0 or 1");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

BlochVector bloch(const json& j, const char* what) {
  const auto& arr = array_of(j, 3, what);
  return {number(arr[0], what), number(arr[1], what), number(arr[2], what)};
}

json bloch_json(const BlochVector& v) { return json::array({v[0], v[1], v[2]}); }

}  // namespace

LabeledBehavior behavior_from_json(const json& j) {
  require_keys(j, "behavior", {"probs"}, {"labels"});
  const auto& arr = array_of(j["probs"], Behavior::kSize, "behavior.probs");
  Behavior::Table t{};
  for (std::size_t k = 0; k < Behavior::kSize; ++k) t[k] = number(arr[k], "behavior.probs");
  LabeledBehavior out{Behavior(t), {}};
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    require_keys(l, "behavior.labels", {"a", "a_prime", "b", "b_prime"});
    out.labels = {setting_index(l["a"], "labels.a"), setting_index(l["a_prime"], "labels.a_prime"),
                  setting_index(l["b"], "labels.b"), setting_index(l["b_prime"], "labels.b_prime")};
  }
  out.behavior.validate(kValidationTolerance);
  return out;
}

json behavior_to_json(const Behavior& b, const ChshLabels& labels) {
  json j;
  j["probs"] = b.probs();
  j["labels"] = {{"a", labels.a}, {"a_prime", labels.a_prime}, {"b", labels.b}, {"b_prime", labels.b_prime}};
  return j;
}

LhvModel lhv_from_json(const json& j) {
  require_keys(j, "lhv model", {"weights", "responses"});
  LhvModel m;
  for (const auto& w : array_of(j["weights"], 0, "lhv.weights")) m.weights.push_back(number(w, "lhv.weights"));
  for (const auto& r : array_of(j["responses"], 0, "lhv.responses")) {
    require_keys(r, "lhv response", {"A", "B"});
    const auto& A = array_of(r["A"], 2, "lhv response A");
    const auto& B = array_of(r["B"], 2, "lhv response B");
    m.responses.push_back({{outcome(A[0], "A"), outcome(A[1], "A")}, {outcome(B[0], "B"), outcome(B[1], "B")}});
  }
  m.validate();
  return m;
}

json lhv_to_json(const LhvModel& m) {
  json j;
  j["weights"] = m.weights;
  j["responses"] = json::array();
  for (const auto& r : m.responses) {
    j["responses"].push_back({{"A", {value_of(r.alice[0]), value_of(r.alice[1])}},
                              {"B", {value_of(r.bob[0]), value_of(r.bob[1])}}});
  }
  return j;
}

TwoQubitState state_from_json(const json& j) {
  const auto& arr = array_of(j, 4, "state");
  TwoQubitState s;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& amp = array_of(arr[k], 2, "state amplitude [re, im]");
    s[k] = {number(amp[0], "state"), number(amp[1], "state")};
  }
  validate_state(s);
  return s;
}

json state_to_json(const TwoQubitState& s) {
  json j = json::array();
  for (const auto& x : s) j.push_back({x.real(), x.imag()});
  return j;
}

MeasurementSettings settings_from_json(const json& j) {
  require_keys(j, "settings", {"a", "a_prime", "b", "b_prime"});
  MeasurementSettings s{bloch(j["a"], "settings.a"), bloch(j["a_prime"], "settings.a_prime"),
                        bloch(j["b"], "settings.b"), bloch(j["b_prime"], "settings.b_prime")};
  s.validate();
  return s;
}

json settings_to_json(const MeasurementSettings& s) {
  return {{"a", bloch_json(s.a)}, {"a_prime", bloch_json(s.a_prime)}, {"b", bloch_json(s.b)},
          {"b_prime", bloch_json(s.b_prime)}};
}

QuantumStrategy strategy_from_json(const json& j) {
  require_keys(j, "quantum strategy", {"state", "settings"});
  return {state_from_json(j["state"]), settings_from_json(j["settings"])};
}

json strategy_to_json(const QuantumStrategy& s) {
  return {{"state", state_to_json(s.state)}, {"settings", settings_to_json(s.settings)}};
}

ModelKind detect_model_kind(const json& j) {
  if (j.is_object()) {
    if (j.contains("probs")) return ModelKind::behavior;
    if (j.contains("weights")) return ModelKind::lhv;
    if (j.contains("state")) return ModelKind::quantum;
  }
  throw ValidationError("model document has none of the keys \"probs\", \"weights\", \"state\"");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace chshlab
