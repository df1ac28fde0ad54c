#if defined(__aarch64__)
#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace zzl::lp::kernels {

void axpy_neon(double* dst, const double* src, double f, std::size_t n) {
  const float64x2_t vf = vdupq_n_f64(f);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    // vmulq + vsubq, not vfmsq: keep the rounding of the scalar path
    float64x2_t d = vld1q_f64(dst + k);
    d = vsubq_f64(d, vmulq_f64(vf, vld1q_f64(src + k)));
    vst1q_f64(dst + k, d);
  }
  for (; k < n; ++k) dst[k] -= f * src[k];
}

void scale_neon(double* x, double f, std::size_t n) {
  const float64x2_t vf = vdupq_n_f64(f);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) vst1q_f64(x + k, vmulq_f64(vld1q_f64(x + k), vf));
  for (; k < n; ++k) x[k] *= f;
}

}  // namespace zzl::lp::kernels
#endif
