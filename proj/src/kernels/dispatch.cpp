#include <cstdlib>
#include <string>

#include "mixlab/common.hpp"
#include "mixlab/kernels.hpp"

namespace mixlab::kernels {

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const Ops& ops(Backend b) {
  if (!backend_supported(b)) {
    fail("kernel error: backend '", backend_name(b), "' not supported on this CPU");
  }
  switch (b) {
    case Backend::scalar:
      return scalar_ops();
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2_ops();
#else
      break;
#endif
  }
  return scalar_ops();
}

namespace {

Backend pick_backend() {
  if (const char* env = std::getenv("MIXLAB_SIMD")) {
    const std::string want = env;
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2") {
      if (!backend_supported(Backend::avx2)) {
        fail("kernel error: MIXLAB_SIMD=avx2 but CPU lacks avx2/fma");
      }
      return Backend::avx2;
    }
    if (!want.empty() && want != "auto") {
      fail("kernel error: unknown MIXLAB_SIMD value '", want, "' (use scalar|avx2|auto)");
    }
  }
  return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend b = pick_backend();
  return b;
}

const Ops& ops() { return ops(active_backend()); }

}  // namespace mixlab::kernels
