#include "variants.hpp"

namespace chshlab::kernels::detail {

void rotate_rows_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

void signed_chsh_scalar(const double* tables, double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = signed_chsh_one(tables + 16 * i);
  }
}

void mix_scalar(const double* first, const double* second, double* out, std::size_t n, double q) {
  const double r = 1.0 - q;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = q * first[k] + r * second[k];
  }
}

}  // namespace chshlab::kernels::detail
