#ifndef DISTDYN_PARALLEL_HPP
#define DISTDYN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace distdyn {

// Worker cap: DISTDYN_THREADS env var, else hardware concurrency.
unsigned thread_limit();

// Runs body(i) for i in [0, n). Work is split into contiguous chunks across
// threads; each index is computed by exactly one worker with a fixed internal
// order, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace distdyn

#endif
