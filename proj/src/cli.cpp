#include "chshlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "chshlab/certify.hpp"
#include "chshlab/commcomplexity.hpp"
#include "chshlab/csv.hpp"
#include "chshlab/errors.hpp"
#include "chshlab/json_io.hpp"
#include "chshlab/lhv.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/superquantum.hpp"
#include "chshlab/surface.hpp"

namespace chshlab {

namespace {

// Flat JSON object whose keys are the long option names of the subcommand.
// Items are routed to whichever subcommand was selected on the command line.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const auto& name = opt->get_lnames().front();
      if (opt->count() > 0) {
        j[name] = opt->results().size() == 1 ? json(opt->results().front()) : json(opt->results());
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      j = json::parse(input);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError("config", e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config", "config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      for (const CLI::App* sub : root_->get_subcommands()) item.parents.push_back(sub->get_name());
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  const CLI::App* root_;
};

struct Options {
  std::string model_path;
  std::string state_path;
  std::string output = "-";
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  bool sample = false;
  double tolerance = kNoSignalingTolerance;
  std::size_t theta_steps = 181;
  std::size_t q_steps = 11;
  std::string base = "quantum-singlet";
  std::size_t n = 8;
  std::vector<double> x_grid;
};

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty() || opt.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw IoError("cannot write " + opt.output);
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + opt.output);
}

std::vector<double> default_x_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(0.2 * k);
  return grid;
}

json report_json(const ChshReport& r) {
  return {{"value", r.value},
          {"regime", to_string(r.regime)},
          {"margin_classical", r.margin_classical},
          {"margin_quantum", r.margin_quantum},
          {"margin_algebraic", r.margin_algebraic}};
}

int run_eval(const Options& opt, std::ostream& out) {
  const auto doc = load_json_file(opt.model_path);
  const auto kind = detect_model_kind(doc);

  Behavior behavior;
  ChshLabels labels;
  std::string kind_name;
  switch (kind) {
    case ModelKind::behavior: {
      auto lb = behavior_from_json(doc);
      behavior = lb.behavior;
      labels = lb.labels;
      kind_name = "behavior";
      break;
    }
    case ModelKind::lhv: {
      const auto model = lhv_from_json(doc);
      behavior = opt.sample ? lhv_sample(model, opt.trials, opt.seed) : lhv_to_behavior(model);
      kind_name = opt.sample ? "lhv-sampled" : "lhv";
      break;
    }
    case ModelKind::quantum:
      behavior = quantum_behavior(strategy_from_json(doc));
      kind_name = "quantum";
      break;
  }

  const auto corr = correlations(behavior, labels);
  const double signed_value = signed_chsh(corr);
  const auto report = classify(std::abs(signed_value));
  const auto ns = no_signaling_check(behavior, opt.tolerance);

  std::ostringstream os;
  if (opt.format == "json") {
    json j = report_json(report);
    j["kind"] = kind_name;
    j["chsh_signed"] = signed_value;
    j["correlations"] = corr.E;
    j["no_signaling"] = ns.pass;
    if (ns.witness) {
      j["signaling_witness"] = {{"side", ns.witness->side == Side::alice ? "A" : "B"},
                                {"setting", ns.witness->setting},
                                {"discrepancy", ns.witness->discrepancy}};
    }
    os << j.dump(2) << '\n';
  } else {
    os << "kind,chsh_signed,chsh_value,regime,margin_classical,margin_quantum,margin_algebraic,no_signaling\n";
    os << kind_name << ',' << format_g17(signed_value) << ',' << format_g17(report.value) << ','
       << to_string(report.regime) << ',' << format_g17(report.margin_classical) << ','
       << format_g17(report.margin_quantum) << ',' << format_g17(report.margin_algebraic) << ','
       << (ns.pass ? "pass" : "fail") << '\n';
  }
  emit(opt, os.str(), out);
  return kExitOk;
}

int run_certify(const Options& opt, std::ostream& out) {
  const auto rows = certify(opt.seed, opt.trials);
  bool all = true;
  std::ostringstream os;
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"check", r.check}, {"bound", r.bound}, {"attained", r.attained},
                   {"tolerance", r.tolerance}, {"passed", r.passed}});
      all = all && r.passed;
    }
    os << j.dump(2) << '\n';
  } else {
    os << "check,bound,attained,tolerance,passed\n";
    for (const auto& r : rows) {
      os << r.check << ',' << format_g17(r.bound) << ',' << format_g17(r.attained) << ','
         << format_g17(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
      all = all && r.passed;
    }
  }
  emit(opt, os.str(), out);
  return all ? kExitOk : kExitValidation;
}

int run_optimize(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto doc = load_json_file(opt.state_path);
  if (!doc.is_object() || !doc.contains("state")) throw ValidationError("state document needs a \"state\" key");
  for (const auto& item : doc.items()) {
    if (item.key() != "state" && item.key() != "settings") {
      throw ValidationError("state document: unknown key \"" + item.key() + "\"");
    }
  }
  const auto state = state_from_json(doc["state"]);
  const auto result = optimize_settings(state, opt.seed);

  std::ostringstream os;
  if (opt.format == "json") {
    json j;
    j["state"] = state_to_json(state);
    j["settings"] = settings_to_json(result.settings);
    j["angles"] = result.angles;
    j["value"] = result.value;
    j["grid_value"] = result.grid_value;
    j["converged"] = result.converged;
    j["iterations"] = result.iterations;
    os << j.dump(2) << '\n';
  } else {
    os << "angle_a,angle_a_prime,angle_b,angle_b_prime,value,grid_value,converged,iterations\n";
    for (double a : result.angles) os << format_g17(a) << ',';
    os << format_g17(result.value) << ',' << format_g17(result.grid_value) << ','
       << (result.converged ? "true" : "false") << ',' << result.iterations << '\n';
  }
  emit(opt, os.str(), out);
  if (!result.converged) {
    err << "optimize: Nelder-Mead did not converge; reporting best point found\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run_surface(const Options& opt, std::ostream& out) {
  SurfaceSpec spec;
  spec.theta_steps = opt.theta_steps;
  spec.q_steps = opt.q_steps;
  spec.base_model = parse_base_model(opt.base);
  spec.output_path = opt.output;
  const auto grid = surface(spec);

  std::ostringstream os;
  if (opt.format == "json") {
    const auto s = summarize(grid);
    json j;
    j["base_model"] = to_string(grid.base_model);
    j["theta"] = grid.thetas;
    j["q"] = grid.qs;
    j["chsh_signed"] = grid.chsh_signed;
    j["summary"] = {{"q0_row_max", s.q0_row_max},
                    {"q1_row_min", s.q1_row_min},
                    {"q1_row_max", s.q1_row_max},
                    {"classical_cut_exists", s.classical_cut_exists},
                    {"superquantum_cut_exists", s.superquantum_cut_exists},
                    {"X_cc", kCommunicationThreshold}};
    os << j.dump(2) << '\n';
  } else {
    write_surface_csv(os, grid);
  }
  emit(opt, os.str(), out);
  return kExitOk;
}

int run_vandam(const Options& opt, std::ostream& out) {
  const auto grid = opt.x_grid.empty() ? default_x_grid() : opt.x_grid;
  const auto rows = success_curve(opt.n, grid, opt.trials, opt.seed);
  std::ostringstream os;
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"X", r.X}, {"empirical", r.empirical}, {"predicted", r.predicted}, {"trials", r.trials},
                   {"n", r.n}, {"seed", r.seed}, {"X_cc", r.is_threshold}});
    }
    os << j.dump(2) << '\n';
  } else {
    write_curve_csv(os, rows);
  }
  emit(opt, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chshlab: classical, quantum and super-quantum CHSH correlations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.set_config("--config", "", "JSON file with option values keyed by long option name");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Options opt;
  const std::vector<std::string> formats{"csv", "json"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--output,-o", opt.output, "output path, '-' for stdout")->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a behavior, LHV model or quantum strategy");
  add_common(eval);
  eval->add_option("--model,-m", opt.model_path, "model JSON file")->required();
  eval->add_flag("--sample", opt.sample, "estimate an LHV behavior by Monte Carlo instead of exactly");
  eval->add_option("--trials", opt.trials, "draws per setting pair with --sample")->capture_default_str();
  eval->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  eval->add_option("--tolerance", opt.tolerance, "no-signaling tolerance")->capture_default_str();

  auto* cert = app.add_subcommand("certify", "certify the bounds 2, 2*sqrt(2) and 4");
  add_common(cert);
  cert->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  cert->add_option("--trials", opt.trials, "random measurement settings to test")->capture_default_str();

  auto* optim = app.add_subcommand("optimize", "maximize CHSH over measurement settings for a state");
  add_common(optim);
  optim->add_option("--state,-s", opt.state_path, "JSON file with a \"state\" key")->required();
  optim->add_option("--seed", opt.seed, "random seed for restarts")->capture_default_str();

  auto* surf = app.add_subcommand("surface", "two-knob CHSH surface over (theta, q)");
  add_common(surf);
  surf->add_option("--theta-steps", opt.theta_steps, "grid points in theta over [0, pi]")->capture_default_str();
  surf->add_option("--q-steps", opt.q_steps, "grid points in q over [0, 1]")->capture_default_str();
  surf->add_option("--base", opt.base, "base model")
      ->check(CLI::IsMember({"quantum-singlet", "classical-deterministic"}))
      ->capture_default_str();

  auto* vandam = app.add_subcommand("vandam", "inner-product protocol success versus box strength X");
  add_common(vandam);
  vandam->add_option("--n", opt.n, "input length (boxes per run)")->capture_default_str();
  vandam->add_option("--x-grid", opt.x_grid, "values of X (default 0, 0.2, ..., 4)");
  vandam->add_option("--trials", opt.trials, "protocol runs per X")->capture_default_str();
  vandam->add_option("--seed", opt.seed, "random seed")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::FileError& e) {
    err << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitValidation;
  }

  try {
    if (eval->parsed()) return run_eval(opt, out);
    if (cert->parsed()) return run_certify(opt, out);
    if (optim->parsed()) return run_optimize(opt, out, err);
    if (surf->parsed()) return run_surface(opt, out);
    if (vandam->parsed()) return run_vandam(opt, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitValidation;
}

}  // namespace chshlab
