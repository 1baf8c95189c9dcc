#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every variant performs the same IEEE operations in the same order as the
// scalar reference (no FMA, no reassociation), so results are bitwise
// identical and the choice of ISA never changes program output.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace chshlab::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  /// Plane rotation of two rows: x <- c*x - s*y, y <- s*x + c*y.
  void (*rotate_rows)(double* x, double* y, std::size_t n, double c, double s);

  /// out[i] = signed CHSH combination of the 16-entry table at tables + 16*i.
  void (*signed_chsh)(const double* tables, double* out, std::size_t count);

  /// out[k] = q*first[k] + (1-q)*second[k].
  void (*mix)(const double* first, const double* second, double* out, std::size_t n, double q);
};

/// Variants compiled into this binary and supported by the running CPU.
std::vector<Isa> available_isas();

/// Kernels for a given ISA; throws std::invalid_argument when unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available variant, detected once at first use.
const KernelTable& active();

void rotate_rows(std::span<double> x, std::span<double> y, double c, double s);

}  // namespace chshlab::kernels
