#pragma once

#include <cstddef>

namespace chshlab::kernels::detail {

void rotate_rows_scalar(double* x, double* y, std::size_t n, double c, double s);
void signed_chsh_scalar(const double* tables, double* out, std::size_t count);
void mix_scalar(const double* first, const double* second, double* out, std::size_t n, double q);

#if defined(CHSHLAB_HAVE_AVX2)
void rotate_rows_avx2(double* x, double* y, std::size_t n, double c, double s);
void signed_chsh_avx2(const double* tables, double* out, std::size_t count);
void mix_avx2(const double* first, const double* second, double* out, std::size_t n, double q);
#endif

#if defined(CHSHLAB_HAVE_NEON)
void rotate_rows_neon(double* x, double* y, std::size_t n, double c, double s);
void signed_chsh_neon(const double* tables, double* out, std::size_t count);
void mix_neon(const double* first, const double* second, double* out, std::size_t n, double q);
#endif

// Reference evaluation order shared by all variants:
//   E(a,b)  = ((p[++] - p[+-]) - p[-+]) + p[--]
//   signed  = ((E00 + E01) + E10) - E11
inline double signed_chsh_one(const double* p) noexcept {
  const double e00 = ((p[0] - p[1]) - p[2]) + p[3];
  const double e01 = ((p[4] - p[5]) - p[6]) + p[7];
  const double e10 = ((p[8] - p[9]) - p[10]) + p[11];
  const double e11 = ((p[12] - p[13]) - p[14]) + p[15];
  return ((e00 + e01) + e10) - e11;
}

}  // namespace chshlab::kernels::detail
