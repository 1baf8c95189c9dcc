#include <arm_neon.h>

#include "variants.hpp"

namespace chshlab::kernels::detail {

// vmulq/vsubq/vaddq only; vfmaq would break equivalence with the scalar path.

void rotate_rows_neon(double* x, double* y, std::size_t n, double c, double s) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t xk = vld1q_f64(x + k);
    const float64x2_t yk = vld1q_f64(y + k);
    vst1q_f64(x + k, vsubq_f64(vmulq_f64(vc, xk), vmulq_f64(vs, yk)));
    vst1q_f64(y + k, vaddq_f64(vmulq_f64(vs, xk), vmulq_f64(vc, yk)));
  }
  if (k < n) rotate_rows_scalar(x + k, y + k, n - k, c, s);
}

namespace {

// Two tables per step; lane i reads from table i.
inline float64x2_t pair(const double* base, int k) {
  const float64x2_t lo = vld1q_dup_f64(base + k);
  return vld1q_lane_f64(base + 16 + k, lo, 1);
}

inline float64x2_t correlation(const double* base, int first) {
  const float64x2_t pp = pair(base, first);
  const float64x2_t pm = pair(base, first + 1);
  const float64x2_t mp = pair(base, first + 2);
  const float64x2_t mm = pair(base, first + 3);
  return vaddq_f64(vsubq_f64(vsubq_f64(pp, pm), mp), mm);
}

}  // namespace

void signed_chsh_neon(const double* tables, double* out, std::size_t count) {
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const double* base = tables + 16 * i;
    const float64x2_t e00 = correlation(base, 0);
    const float64x2_t e01 = correlation(base, 4);
    const float64x2_t e10 = correlation(base, 8);
    const float64x2_t e11 = correlation(base, 12);
    vst1q_f64(out + i, vsubq_f64(vaddq_f64(vaddq_f64(e00, e01), e10), e11));
  }
  if (i < count) signed_chsh_scalar(tables + 16 * i, out + i, count - i);
}

void mix_neon(const double* first, const double* second, double* out, std::size_t n, double q) {
  const float64x2_t vq = vdupq_n_f64(q);
  const float64x2_t vr = vdupq_n_f64(1.0 - q);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t a = vmulq_f64(vq, vld1q_f64(first + k));
    const float64x2_t b = vmulq_f64(vr, vld1q_f64(second + k));
    vst1q_f64(out + k, vaddq_f64(a, b));
  }
  if (k < n) mix_scalar(first + k, second + k, out + k, n - k, q);
}

}  // namespace chshlab::kernels::detail
