#include "hstnet/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hstnet::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& active() {
  static const Ops* selected = [] {
    const char* forced = std::getenv("HSTNET_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return &scalar_ops();
    return avx2_available() ? &avx2_ops() : &scalar_ops();
  }();
  return *selected;
}

}  // namespace hstnet::kernels
