#pragma once

#include <cstddef>
#include <cstdint>

namespace mixlab::kernels {

/// Hot-loop primitives behind the toolkit's numeric paths. Every entry has a
/// scalar reference implementation; an AVX2 variant is selected at runtime
/// when the CPU supports it (override with MIXLAB_SIMD=scalar|avx2|auto).
///
/// Elementwise ops (lerp/select/relu/relu_mask/axpy/scale) are bit-identical
/// across backends: the AVX2 code uses the same mul/add sequence as the
/// scalar code. Reductions and gemm may reassociate and are equivalence
/// tested against the scalar reference with a tolerance instead.
struct Ops {
  const char* name;

  /// dst[i] = wa * a[i] + (1 - wa) * b[i]
  void (*lerp_f32)(float* dst, const float* a, const float* b, float wa, std::size_t n);
  /// dst[i] = take_a[i] ? a[i] : b[i]
  void (*select_f32)(float* dst, const std::uint8_t* take_a, const float* a, const float* b,
                     std::size_t n);
  /// dst[i] = max(x[i], 0)
  void (*relu_f32)(float* dst, const float* x, std::size_t n);
  /// grad[i] = act[i] > 0 ? grad[i] : 0
  void (*relu_mask_f32)(float* grad, const float* act, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy_f32)(float* y, float alpha, const float* x, std::size_t n);
  /// x[i] *= alpha
  void (*scale_f32)(float* x, float alpha, std::size_t n);
  /// sum of x in double
  double (*sum_f32)(const float* x, std::size_t n);
  /// squared Euclidean distance, double accumulate
  double (*sqdist_f64)(const double* a, const double* b, std::size_t n);
  /// C[M x N] += A[M x K] * B[K x N], row-major with leading strides.
  void (*gemm_f32)(std::size_t m, std::size_t n, std::size_t k, const float* a, std::size_t lda,
                   const float* b, std::size_t ldb, float* c, std::size_t ldc);
};

enum class Backend { scalar = 0, avx2 = 1 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

/// Table for a specific backend; throws if the CPU does not support it.
const Ops& ops(Backend b);

/// Active table, chosen once per process.
const Ops& ops();
Backend active_backend();

}  // namespace mixlab::kernels
