#include "fraclab/kernels.hpp"

namespace fraclab::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot_reverse_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[n - 1 - i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{dot_scalar, dot_reverse_scalar, axpy_scalar};
  return ops;
}

}  // namespace fraclab::kernels
