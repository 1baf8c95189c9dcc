#include "chshlab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "chshlab/csv.hpp"
#include "chshlab/errors.hpp"
#include "chshlab/kernels.hpp"
#include "chshlab/quantum.hpp"
#include "chshlab/superquantum.hpp"

namespace chshlab {

std::string to_string(BaseModel m) {
  return m == BaseModel::quantum_singlet ? "quantum-singlet" : "classical-deterministic";
}

BaseModel parse_base_model(const std::string& name) {
  if (name == "quantum-singlet") return BaseModel::quantum_singlet;
  if (name == "classical-deterministic") return BaseModel::classical_deterministic;
  throw ValidationError("unknown base model '" + name + "'");
}

void SurfaceSpec::validate() const {
  if (theta_steps < 2 || q_steps < 2) throw ValidationError("surface needs at least 2 steps per knob");
}

Behavior singlet_behavior_at(double theta) {
  return quantum_behavior({singlet_state(), coplanar_settings(0.0, 2.0 * theta, theta, -theta)});
}

Behavior base_behavior(BaseModel model, double theta) {
  if (model == BaseModel::quantum_singlet) return singlet_behavior_at(theta);
  return deterministic_behavior(Outcome::plus, Outcome::plus, Outcome::plus, Outcome::plus);
}

std::vector<SurfaceCut> SurfaceGrid::cuts() const {
  std::vector<SurfaceCut> out;
  for (std::size_t j = 0; j < qs.size(); ++j) {
    SurfaceCut cut{qs[j], 0.0};
    for (std::size_t i = 0; i < thetas.size(); ++i) cut.max_abs = std::max(cut.max_abs, std::abs(signed_at(i, j)));
    out.push_back(cut);
  }
  return out;
}

SurfaceGrid surface(const SurfaceSpec& spec) {
  spec.validate();
  SurfaceGrid grid;
  grid.base_model = spec.base_model;
  for (std::size_t i = 0; i < spec.theta_steps; ++i) {
    grid.thetas.push_back(std::numbers::pi * static_cast<double>(i) / static_cast<double>(spec.theta_steps - 1));
  }
  for (std::size_t j = 0; j < spec.q_steps; ++j) {
    grid.qs.push_back(static_cast<double>(j) / static_cast<double>(spec.q_steps - 1));
  }

  const auto pr = pr_box();
  const auto& kern = kernels::active();
  std::vector<double> tables(grid.thetas.size() * grid.qs.size() * Behavior::kSize);
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    const auto base = base_behavior(spec.base_model, grid.thetas[i]);
    for (std::size_t j = 0; j < grid.qs.size(); ++j) {
      double* cell = tables.data() + (i * grid.qs.size() + j) * Behavior::kSize;
      kern.mix(pr.probs().data(), base.probs().data(), cell, Behavior::kSize, grid.qs[j]);
    }
  }
  grid.chsh_signed.resize(grid.thetas.size() * grid.qs.size());
  kern.signed_chsh(tables.data(), grid.chsh_signed.data(), grid.chsh_signed.size());
  return grid;
}

SurfaceSummary summarize(const SurfaceGrid& grid) {
  SurfaceSummary s;
  const auto cuts = grid.cuts();
  s.q0_row_max = cuts.front().max_abs;
  const std::size_t last = grid.qs.size() - 1;
  s.q1_row_min = INFINITY;
  s.q1_row_max = -INFINITY;
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    s.q1_row_min = std::min(s.q1_row_min, grid.signed_at(i, last));
    s.q1_row_max = std::max(s.q1_row_max, grid.signed_at(i, last));
  }
  for (const auto& cut : cuts) {
    const auto regime = classify(cut.max_abs).regime;
    s.classical_cut_exists = s.classical_cut_exists || regime == Regime::classical_compatible;
    s.superquantum_cut_exists =
        s.superquantum_cut_exists || regime == Regime::super_quantum || regime == Regime::maximal;
  }
  return s;
}

void write_surface_csv(std::ostream& os, const SurfaceGrid& grid) {
  os << "theta,q,chsh_signed,chsh_abs\n";
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    for (std::size_t j = 0; j < grid.qs.size(); ++j) {
      const double v = grid.signed_at(i, j);
      os << format_g17(grid.thetas[i]) << ',' << format_g17(grid.qs[j]) << ',' << format_g17(v) << ','
         << format_g17(std::abs(v)) << '\n';
    }
  }
  const auto s = summarize(grid);
  os << "# base_model = " << to_string(grid.base_model) << '\n';
  for (const auto& cut : grid.cuts()) {
    os << "# cut q = " << format_g17(cut.q) << " max_abs = " << format_g17(cut.max_abs)
       << " regime = " << to_string(classify(cut.max_abs).regime) << '\n';
  }
  os << "# q0_row_max = " << format_g17(s.q0_row_max) << '\n';
  os << "# q1_row_min = " << format_g17(s.q1_row_min) << '\n';
  os << "# q1_row_max = " << format_g17(s.q1_row_max) << '\n';
  os << "# classical_cut_exists = " << (s.classical_cut_exists ? "true" : "false") << '\n';
  os << "# superquantum_cut_exists = " << (s.superquantum_cut_exists ? "true" : "false") << '\n';
  os << "# X_cc = 3.2659863237\n";
}

std::vector<std::array<double, 4>> read_surface_csv(const std::string& text) {
  std::vector<std::array<double, 4>> out;
  for (const auto& row : parse_numeric_csv(text, "theta,q,chsh_signed,chsh_abs")) {
    if (row.size() != 4) throw ValidationError("surface CSV rows need 4 columns");
    out.push_back({row[0], row[1], row[2], row[3]});
  }
  return out;
}

}  // namespace chshlab
