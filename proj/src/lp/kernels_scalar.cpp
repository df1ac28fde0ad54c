#include "kernels_impl.hpp"

namespace zzl::lp::kernels {

void axpy_scalar(double* dst, const double* src, double f, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] -= f * src[k];
}

void scale_scalar(double* x, double f, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= f;
}

}  // namespace zzl::lp::kernels
