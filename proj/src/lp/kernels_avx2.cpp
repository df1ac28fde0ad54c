#include <immintrin.h>

#include "kernels_impl.hpp"

namespace zzl::lp::kernels {

void axpy_avx2(double* dst, const double* src, double f, std::size_t n) {
  const __m256d vf = _mm256_set1_pd(f);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256d d0 = _mm256_loadu_pd(dst + k);
    __m256d d1 = _mm256_loadu_pd(dst + k + 4);
    // separate mul and sub; an FMA would round differently from the scalar path
    d0 = _mm256_sub_pd(d0, _mm256_mul_pd(vf, _mm256_loadu_pd(src + k)));
    d1 = _mm256_sub_pd(d1, _mm256_mul_pd(vf, _mm256_loadu_pd(src + k + 4)));
    _mm256_storeu_pd(dst + k, d0);
    _mm256_storeu_pd(dst + k + 4, d1);
  }
  for (; k + 4 <= n; k += 4) {
    __m256d d = _mm256_loadu_pd(dst + k);
    d = _mm256_sub_pd(d, _mm256_mul_pd(vf, _mm256_loadu_pd(src + k)));
    _mm256_storeu_pd(dst + k, d);
  }
  for (; k < n; ++k) dst[k] -= f * src[k];
}

void scale_avx2(double* x, double f, std::size_t n) {
  const __m256d vf = _mm256_set1_pd(f);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(x + k, _mm256_mul_pd(_mm256_loadu_pd(x + k), vf));
  }
  for (; k < n; ++k) x[k] *= f;
}

}  // namespace zzl::lp::kernels
