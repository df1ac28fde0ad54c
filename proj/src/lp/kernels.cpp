#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"
#include "zzl/lp_kernels.hpp"

namespace zzl::lp::kernels {

const Kernels& scalar() {
  static const Kernels k{"scalar", axpy_scalar, scale_scalar};
  return k;
}

const Kernels* avx2() {
#if defined(ZZL_HAVE_AVX2)
  static const Kernels k{"avx2", axpy_avx2, scale_avx2};
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return &k;
#endif
  return nullptr;
}

const Kernels* neon() {
#if defined(__aarch64__)
  static const Kernels k{"neon", axpy_neon, scale_neon};
  return &k;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* forced = std::getenv("ZZL_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return &scalar();
    if (const Kernels* k = avx2()) return k;
    if (const Kernels* k = neon()) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace zzl::lp::kernels
