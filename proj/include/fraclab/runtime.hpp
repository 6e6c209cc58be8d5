#pragma once

#include <cstddef>
#include <functional>

namespace fraclab::runtime {

// Process-wide worker count used by parallel_for. Defaults to 1.
void set_threads(unsigned n);
unsigned threads();

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks,
// one per worker. Results must be written to disjoint slots so that the
// outcome is identical for every thread count; reductions happen after
// the join, in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fraclab::runtime
