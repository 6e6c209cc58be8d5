#include "fraclab/runtime.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace fraclab::runtime {
namespace {

std::atomic<unsigned> g_threads{1};

}  // namespace

void set_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

unsigned threads() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned nt = std::min<std::size_t>(threads(), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nt);
  const std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned w = 0; w < nt; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    workers.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace fraclab::runtime
