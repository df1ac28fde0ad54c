#pragma once

#include <cstddef>

namespace zzl::lp::kernels {

void axpy_scalar(double* dst, const double* src, double f, std::size_t n);
void scale_scalar(double* x, double f, std::size_t n);

#if defined(ZZL_HAVE_AVX2)
void axpy_avx2(double* dst, const double* src, double f, std::size_t n);
void scale_avx2(double* x, double f, std::size_t n);
#endif

#if defined(__aarch64__)
void axpy_neon(double* dst, const double* src, double f, std::size_t n);
void scale_neon(double* x, double f, std::size_t n);
#endif

}  // namespace zzl::lp::kernels
