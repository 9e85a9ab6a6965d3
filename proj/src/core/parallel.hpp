#ifndef BQA_CORE_PARALLEL_HPP
#define BQA_CORE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace bqa {

// Worker cap: BQA_THREADS when set (clamped to >= 1), else the hardware
// concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n). Results must be written by index; the schedule
// is work-stealing but observable output stays order-independent. Nested
// calls run serially on the calling worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bqa

#endif
