#pragma once

#include <cstddef>

// Row kernels of the simplex tableau. Every variant computes bit-identical
// results: no FMA contraction, same operation order per element.
namespace zzl::lp::kernels {

/// dst[k] -= f * src[k]
using AxpyFn = void (*)(double* dst, const double* src, double f, std::size_t n);
/// x[k] *= f
using ScaleFn = void (*)(double* x, double f, std::size_t n);

struct Kernels {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

const Kernels& scalar();
/// nullptr when not compiled in or not supported by the running CPU.
const Kernels* avx2();
const Kernels* neon();

/// Best supported variant; ZZL_SIMD=scalar in the environment forces the
/// reference kernels.
const Kernels& active();

}  // namespace zzl::lp::kernels
