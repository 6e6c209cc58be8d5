#include "fraclab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fraclab::kernels {

#if defined(__x86_64__) || defined(__i386__)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

namespace {

struct Selection {
  Backend backend;
  const Ops* ops;
};

Selection select() {
  const char* env = std::getenv("FRACLAB_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return {Backend::scalar, &scalar_ops()};
#if defined(__x86_64__) || defined(__i386__)
    if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2") &&
        __builtin_cpu_supports("fma"))
      return {Backend::avx2, &avx2_ops()};
#endif
#if defined(__aarch64__)
    if (std::strcmp(env, "neon") == 0) return {Backend::neon, &neon_ops()};
#endif
    // Unknown or unsupported request: fall through to auto detection.
  }
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return {Backend::avx2, &avx2_ops()};
#endif
#if defined(__aarch64__)
  return {Backend::neon, &neon_ops()};
#endif
  return {Backend::scalar, &scalar_ops()};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& active() { return *selection().ops; }

Backend active_backend() { return selection().backend; }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }

double dot_reverse(const double* a, const double* b, std::size_t n) {
  return active().dot_reverse(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}

}  // namespace fraclab::kernels
