#pragma once

#include <optional>

#include "chshlab/behavior.hpp"

namespace chshlab {

/// Communication-complexity threshold 4*sqrt(2/3).
inline constexpr double kCommunicationThreshold = 3.2659863237109041;

/// PR box: uniform marginals, A*B = +1 on (0,0), (0,1), (1,0) and -1 on (1,1).
/// In bit form alpha XOR beta = a AND b.
Behavior pr_box() noexcept;

/// Isotropic mixture (X/4) * PR + (1 - X/4) * uniform noise; CHSH value X.
struct NoisyPrBox {
  double X = 0.0;
  Behavior behavior;
};

NoisyPrBox noisy_box(double X);

/// l^p exponent; std::nullopt in `p` stands for p = infinity.
class PNormSpace {
 public:
  explicit PNormSpace(double p);
  static PNormSpace infinity() noexcept { return PNormSpace(); }

  bool is_infinite() const noexcept { return !p_.has_value(); }
  double p() const;  // throws for the infinite space

 private:
  PNormSpace() = default;
  std::optional<double> p_;
};

struct PVector {
  double alpha = 0.0;
  double beta = 0.0;
};

/// (|alpha|^p + |beta|^p)^(1/p); max(|alpha|, |beta|) for p = infinity.
double pnorm(const PNormSpace& space, const PVector& v);

/// ||e1 + e2||_p + ||e1 - e2||_p = 2 * 2^(1/p).
double pnorm_chsh_bound(const PNormSpace& space);

/// Dieks chain ||B + B'|| + ||B - B'|| evaluated in l^p for explicit vectors.
double pnorm_chain(const PNormSpace& space, const PVector& b, const PVector& b_prime);

struct DegenerateNormReport {
  double degenerate_bound = 0.0;       // chain with ||B +/- B'|| = ||B|| + ||B'||
  double p1_bound = 0.0;               // pnorm_chsh_bound(1)
  double difference = 0.0;             // degenerate_bound - p1_bound
  double euclidean_chain = 0.0;        // l^2 chain on orthogonal unit vectors
  double l1_rotated_chain = 0.0;       // l^1 chain with B, B' the 45-degree rotated basis
  double rotation_discrepancy = 0.0;   // p1_bound - l1_rotated_chain
};

DegenerateNormReport hbar_infinity_norm_check();

}  // namespace chshlab
