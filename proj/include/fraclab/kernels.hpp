#pragma once

#include <cstddef>
#include <string_view>

namespace fraclab::kernels {

// Data-parallel primitives behind the quadrature and spectral sums.
// A scalar reference build is always available; wider variants are
// selected once at startup from CPU capabilities and can be overridden
// with the FRACLAB_KERNELS environment variable (scalar|avx2|neon).

enum class Backend { scalar, avx2, neon };

struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]*b[n-1-i]
  double (*dot_reverse)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha*x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

// Active backend. Stable for the lifetime of the process.
const Ops& active();
Backend active_backend();
std::string_view backend_name(Backend b);

// Reference implementations (used by the equivalence tests as the oracle).
const Ops& scalar_ops();

double dot(const double* a, const double* b, std::size_t n);
double dot_reverse(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);

}  // namespace fraclab::kernels
