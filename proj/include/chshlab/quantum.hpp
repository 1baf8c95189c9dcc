#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chshlab/behavior.hpp"
#include "chshlab/linalg.hpp"
#include "chshlab/random.hpp"

namespace chshlab {

using BlochVector = std::array<double, 3>;
using TwoQubitState = std::array<cplx, 4>;  // basis |00>, |01>, |10>, |11>

inline constexpr double kUnitTolerance = 1e-12;

/// Measurement directions for Alice (a, a') and Bob (b, b').
struct MeasurementSettings {
  BlochVector a{0.0, 0.0, 1.0};
  BlochVector a_prime{0.0, 0.0, 1.0};
  BlochVector b{0.0, 0.0, 1.0};
  BlochVector b_prime{0.0, 0.0, 1.0};

  void validate() const;
  friend bool operator==(const MeasurementSettings&, const MeasurementSettings&) = default;
};

struct QuantumStrategy {
  TwoQubitState state{};
  MeasurementSettings settings;

  void validate() const;
};

struct SpectralReport {
  double chat_norm = 0.0;
  double chsh_expectation = 0.0;  // <psi| C |psi>, signed
  double identity_residual = 0.0;
};

/// Unit vector in the x-z plane at polar angle `angle` from +z.
BlochVector coplanar_direction(double angle) noexcept;

/// Settings whose four vectors sit in the x-z plane at the given angles.
MeasurementSettings coplanar_settings(double a, double a_prime, double b, double b_prime) noexcept;

/// Singlet (|01> - |10>)/sqrt(2).
TwoQubitState singlet_state() noexcept;

/// A choice of settings reaching 2*sqrt(2) on the singlet:
/// a = 0, a' = 90 deg, b = 225 deg, b' = 135 deg in the x-z plane.
MeasurementSettings canonical_maximal_settings() noexcept;

void validate_state(const TwoQubitState& state);

/// Uniformly distributed unit vector (normalized Gaussian triple).
BlochVector random_bloch_vector(Rng& rng);
MeasurementSettings random_settings(Rng& rng);

/// n . sigma for a unit Bloch vector.
ComplexMatrix observable(const BlochVector& n);

/// C = A(x)B + A(x)B' + A'(x)B - A'(x)B'.
ComplexMatrix chat(const MeasurementSettings& settings);

/// Frobenius norm of C^2 - (4 I - [A, A'] (x) [B, B']).
double chat_squared_identity(const MeasurementSettings& settings);

/// Joint probabilities from the projectors (I + A n.sigma)/2 (x) (I + B m.sigma)/2.
Behavior quantum_behavior(const QuantumStrategy& strategy);

/// Signed <psi| C |psi> computed from the operator.
double chsh_expectation(const QuantumStrategy& strategy);

SpectralReport spectral_report(const QuantumStrategy& strategy);

/// Symmetrized CHSH operator for possibly non-commuting dichotomic operators:
/// C = 1/2 ({A,B} + {A,B'} + {A',B} - {A',B'}).
struct OperatorQuadruple {
  ComplexMatrix A, A_prime, B, B_prime;
};

ComplexMatrix symmetrized_chat(const OperatorQuadruple& ops);

/// The side-commuting embedding A (x) I and I (x) B used by chat().
OperatorQuadruple tensor_operators(const MeasurementSettings& settings);

// --- measurement-setting optimization -------------------------------------

struct OptimizeOptions {
  double grid_step_degrees = 3.0;
  int max_iterations = 500;
  double simplex_tolerance = 1e-9;
  int restarts = 4;  // seeded perturbations of the grid optimum, on top of the grid start
};

struct OptimizeResult {
  bool converged = false;
  MeasurementSettings settings;
  std::array<double, 4> angles{};  // a, a', b, b' in radians, x-z plane
  double value = 0.0;              // best signed CHSH expectation found
  double grid_value = 0.0;         // best value on the coarse grid
  int iterations = 0;              // Nelder-Mead iterations of the selected run
};

/// Coarse coplanar grid search followed by Nelder-Mead refinement of the four
/// angles. Never throws on non-convergence: `converged` is false and the result
/// carries the best point seen.
OptimizeResult optimize_settings(const TwoQubitState& state, std::uint64_t seed,
                                 const OptimizeOptions& options = {});

/// Best value of the signed CHSH expectation over the coplanar angle grid.
struct GridOptimum {
  std::array<double, 4> angles{};
  double value = 0.0;
};

GridOptimum coplanar_grid_search(const TwoQubitState& state, double step_degrees);

}  // namespace chshlab
