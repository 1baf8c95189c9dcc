#include <immintrin.h>

#include "variants.hpp"

namespace chshlab::kernels::detail {

void rotate_rows_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xk = _mm256_loadu_pd(x + k);
    const __m256d yk = _mm256_loadu_pd(y + k);
    _mm256_storeu_pd(x + k, _mm256_sub_pd(_mm256_mul_pd(vc, xk), _mm256_mul_pd(vs, yk)));
    _mm256_storeu_pd(y + k, _mm256_add_pd(_mm256_mul_pd(vs, xk), _mm256_mul_pd(vc, yk)));
  }
  if (k < n) rotate_rows_scalar(x + k, y + k, n - k, c, s);
}

namespace {

// Lane i holds entry `k` of table i in a block of four tables.
inline __m256d gather(const double* base, __m256i stride, int k) {
  return _mm256_i64gather_pd(base + k, stride, 8);
}

inline __m256d correlation(const double* base, __m256i stride, int first) {
  const __m256d pp = gather(base, stride, first);
  const __m256d pm = gather(base, stride, first + 1);
  const __m256d mp = gather(base, stride, first + 2);
  const __m256d mm = gather(base, stride, first + 3);
  return _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(pp, pm), mp), mm);
}

}  // namespace

void signed_chsh_avx2(const double* tables, double* out, std::size_t count) {
  const __m256i stride = _mm256_set_epi64x(48, 32, 16, 0);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const double* base = tables + 16 * i;
    const __m256d e00 = correlation(base, stride, 0);
    const __m256d e01 = correlation(base, stride, 4);
    const __m256d e10 = correlation(base, stride, 8);
    const __m256d e11 = correlation(base, stride, 12);
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(e00, e01), e10), e11));
  }
  if (i < count) signed_chsh_scalar(tables + 16 * i, out + i, count - i);
}

void mix_avx2(const double* first, const double* second, double* out, std::size_t n, double q) {
  const __m256d vq = _mm256_set1_pd(q);
  const __m256d vr = _mm256_set1_pd(1.0 - q);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a = _mm256_mul_pd(vq, _mm256_loadu_pd(first + k));
    const __m256d b = _mm256_mul_pd(vr, _mm256_loadu_pd(second + k));
    _mm256_storeu_pd(out + k, _mm256_add_pd(a, b));
  }
  if (k < n) mix_scalar(first + k, second + k, out + k, n - k, q);
}

}  // namespace chshlab::kernels::detail
