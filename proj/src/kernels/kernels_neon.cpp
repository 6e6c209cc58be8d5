// NEON variants for aarch64. Mirrors the AVX2 translation unit.
#if defined(__aarch64__)

#include <arm_neon.h>

#include "fraclab/kernels.hpp"

namespace fraclab::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t s0 = vdupq_n_f64(0.0);
  float64x2_t s1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = vfmaq_f64(s0, vld1q_f64(a + i), vld1q_f64(b + i));
    s1 = vfmaq_f64(s1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) s0 = vfmaq_f64(s0, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vaddvq_f64(s0) + vaddvq_f64(s1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot_reverse_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t s0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vb = vld1q_f64(b + n - 2 - i);
    vb = vextq_f64(vb, vb, 1);  // swap the two lanes
    s0 = vfmaq_f64(s0, vld1q_f64(a + i), vb);
  }
  double s = vaddvq_f64(s0);
  for (; i < n; ++i) s += a[i] * b[n - 1 - i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops{dot_neon, dot_reverse_neon, axpy_neon};
  return ops;
}

}  // namespace fraclab::kernels

#endif
