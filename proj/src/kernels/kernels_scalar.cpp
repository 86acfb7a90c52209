#include "mixlab/kernels.hpp"

// Reference kernels. These define the semantics the SIMD variants are tested
// against; keep them free of manual unrolling so the intent stays obvious.

namespace mixlab::kernels {

namespace {

void lerp_f32(float* dst, const float* a, const float* b, float wa, std::size_t n) {
  const float wb = 1.0f - wa;
  for (std::size_t i = 0; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

void select_f32(float* dst, const std::uint8_t* take_a, const float* a, const float* b,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = take_a[i] ? a[i] : b[i];
}

void relu_f32(float* dst, const float* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_mask_f32(float* grad, const float* act, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!(act[i] > 0.0f)) grad[i] = 0.0f;
  }
}

void axpy_f32(float* y, float alpha, const float* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_f32(float* x, float alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sum_f32(const float* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sqdist_f64(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void gemm_f32(std::size_t m, std::size_t n, std::size_t k, const float* a, std::size_t lda,
              const float* b, std::size_t ldb, float* c, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    float* crow = c + i * ldc;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const float aik = a[i * lda + kk];
      const float* brow = b + kk * ldb;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      "scalar",   lerp_f32, select_f32, relu_f32, relu_mask_f32,
      axpy_f32,   scale_f32, sum_f32,   sqdist_f64, gemm_f32,
  };
  return table;
}

}  // namespace mixlab::kernels
