#pragma once

#include <cstddef>
#include <functional>

namespace abc {

/// Worker count: ABCSPEC_THREADS when set, else hardware concurrency.
unsigned default_threads();

/// Runs fn(i) for i in [0, count) across `threads` workers. Results must be
/// written into caller-owned slots indexed by i so aggregation stays
/// deterministic. fn must not throw.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace abc
