// AVX2 kernel variants. This TU is compiled with -mavx2 -mfma; everything here
// is reached only after the runtime CPU check in dispatch.cpp.
//
// Elementwise kernels intentionally use mul+add (not FMA) so results are
// bit-identical to the scalar reference. gemm and the reductions use FMA and
// wide accumulators and are held to a tolerance instead.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "mixlab/kernels.hpp"

namespace mixlab::kernels {

namespace {

void lerp_f32(float* dst, const float* a, const float* b, float wa, std::size_t n) {
  const float wb = 1.0f - wa;
  const __m256 va = _mm256_set1_ps(wa);
  const __m256 vb = _mm256_set1_ps(wb);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 pa = _mm256_mul_ps(va, _mm256_loadu_ps(a + i));
    const __m256 pb = _mm256_mul_ps(vb, _mm256_loadu_ps(b + i));
    _mm256_storeu_ps(dst + i, _mm256_add_ps(pa, pb));
  }
  for (; i < n; ++i) {
    const float pa = wa * a[i];
    const float pb = wb * b[i];
    dst[i] = pa + pb;
  }
}

void select_f32(float* dst, const std::uint8_t* take_a, const float* a, const float* b,
                std::size_t n) {
  std::size_t i = 0;
  const __m128i zero8 = _mm_setzero_si128();
  for (; i + 8 <= n; i += 8) {
    const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(take_a + i));
    const __m256i lanes = _mm256_cvtepu8_epi32(bytes);
    const __m256 mask = _mm256_castsi256_ps(_mm256_cmpgt_epi32(lanes, _mm256_setzero_si256()));
    const __m256 va = _mm256_loadu_ps(a + i);
    const __m256 vb = _mm256_loadu_ps(b + i);
    _mm256_storeu_ps(dst + i, _mm256_blendv_ps(vb, va, mask));
  }
  (void)zero8;
  for (; i < n; ++i) dst[i] = take_a[i] ? a[i] : b[i];
}

void relu_f32(float* dst, const float* x, std::size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(dst + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
  }
  for (; i < n; ++i) dst[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_mask_f32(float* grad, const float* act, std::size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 keep = _mm256_cmp_ps(_mm256_loadu_ps(act + i), zero, _CMP_GT_OQ);
    _mm256_storeu_ps(grad + i, _mm256_and_ps(_mm256_loadu_ps(grad + i), keep));
  }
  for (; i < n; ++i) {
    if (!(act[i] > 0.0f)) grad[i] = 0.0f;
  }
}

void axpy_f32(float* y, float alpha, const float* x, std::size_t n) {
  const __m256 va = _mm256_set1_ps(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 prod = _mm256_mul_ps(va, _mm256_loadu_ps(x + i));
    _mm256_storeu_ps(y + i, _mm256_add_ps(_mm256_loadu_ps(y + i), prod));
  }
  for (; i < n; ++i) {
    const float prod = alpha * x[i];
    y[i] = y[i] + prod;
  }
}

void scale_f32(float* x, float alpha, std::size_t n) {
  const __m256 va = _mm256_set1_ps(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(x + i, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

double sum_f32(const float* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 v = _mm256_loadu_ps(x + i);
    acc0 = _mm256_add_pd(acc0, _mm256_cvtps_pd(_mm256_castps256_ps128(v)));
    acc1 = _mm256_add_pd(acc1, _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1)));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
  for (; i < n; ++i) total += x[i];
  return total;
}

double sqdist_f64(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

void gemm_f32(std::size_t m, std::size_t n, std::size_t k, const float* a, std::size_t lda,
              const float* b, std::size_t ldb, float* c, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    const float* arow = a + i * lda;
    float* crow = c + i * ldc;
    std::size_t j = 0;
    for (; j + 32 <= n; j += 32) {
      __m256 c0 = _mm256_loadu_ps(crow + j);
      __m256 c1 = _mm256_loadu_ps(crow + j + 8);
      __m256 c2 = _mm256_loadu_ps(crow + j + 16);
      __m256 c3 = _mm256_loadu_ps(crow + j + 24);
      for (std::size_t kk = 0; kk < k; ++kk) {
        const __m256 av = _mm256_set1_ps(arow[kk]);
        const float* brow = b + kk * ldb + j;
        c0 = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow), c0);
        c1 = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow + 8), c1);
        c2 = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow + 16), c2);
        c3 = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow + 24), c3);
      }
      _mm256_storeu_ps(crow + j, c0);
      _mm256_storeu_ps(crow + j + 8, c1);
      _mm256_storeu_ps(crow + j + 16, c2);
      _mm256_storeu_ps(crow + j + 24, c3);
    }
    for (; j + 8 <= n; j += 8) {
      __m256 c0 = _mm256_loadu_ps(crow + j);
      for (std::size_t kk = 0; kk < k; ++kk) {
        c0 = _mm256_fmadd_ps(_mm256_set1_ps(arow[kk]), _mm256_loadu_ps(b + kk * ldb + j), c0);
      }
      _mm256_storeu_ps(crow + j, c0);
    }
    for (; j < n; ++j) {
      float acc = crow[j];
      for (std::size_t kk = 0; kk < k; ++kk) acc += arow[kk] * b[kk * ldb + j];
      crow[j] = acc;
    }
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table = {
      "avx2",     lerp_f32, select_f32, relu_f32, relu_mask_f32,
      axpy_f32,   scale_f32, sum_f32,   sqdist_f64, gemm_f32,
  };
  return table;
}

}  // namespace mixlab::kernels

#endif  // x86_64
