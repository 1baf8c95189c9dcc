#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chshlab/behavior.hpp"

namespace chshlab {

/// Behavior the PR box is mixed into along the second knob.
enum class BaseModel { quantum_singlet, classical_deterministic };

std::string to_string(BaseModel m);
BaseModel parse_base_model(const std::string& name);

/// Two-knob grid: theta in [0, pi] (relative measurement angle) and the PR
/// mixing weight q in [0, 1], both inclusive.
struct SurfaceSpec {
  std::size_t theta_steps = 181;
  std::size_t q_steps = 11;
  BaseModel base_model = BaseModel::quantum_singlet;
  std::string output_path = "-";

  void validate() const;
};

/// Singlet behavior with coplanar settings a = 0, b = theta, a' = 2 theta,
/// b' = -theta. Its signed combination is cos(3 theta) - 3 cos(theta).
Behavior singlet_behavior_at(double theta);

Behavior base_behavior(BaseModel model, double theta);

struct SurfaceCut {
  double q = 0.0;
  double max_abs = 0.0;
};

struct SurfaceGrid {
  BaseModel base_model = BaseModel::quantum_singlet;
  std::vector<double> thetas;
  std::vector<double> qs;
  std::vector<double> chsh_signed;  // theta-major: index i * qs.size() + j

  double signed_at(std::size_t i, std::size_t j) const { return chsh_signed[i * qs.size() + j]; }

  /// One cut per q: the theta-curve at that value of the second knob.
  std::vector<SurfaceCut> cuts() const;
};

struct SurfaceSummary {
  double q0_row_max = 0.0;       // max |CHSH| over theta at q = 0
  double q1_row_min = 0.0;       // min signed CHSH over theta at q = 1
  double q1_row_max = 0.0;
  bool classical_cut_exists = false;      // some cut with max <= 2
  bool superquantum_cut_exists = false;   // some cut with max > 2 sqrt(2)
};

SurfaceGrid surface(const SurfaceSpec& spec);
SurfaceSummary summarize(const SurfaceGrid& grid);

/// Header "theta,q,chsh_signed,chsh_abs", 17-significant-digit rows, then the
/// summary as "# " comment lines.
void write_surface_csv(std::ostream& os, const SurfaceGrid& grid);

/// Rows (theta, q, chsh_signed, chsh_abs) of an emitted surface CSV.
std::vector<std::array<double, 4>> read_surface_csv(const std::string& text);

}  // namespace chshlab
