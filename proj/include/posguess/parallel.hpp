#pragma once

#include <cstddef>
#include <functional>

namespace posguess {

// 0 means "use hardware concurrency"; never returns 0.
unsigned resolve_threads(unsigned requested);

// Number of workers parallel_for will actually launch for n items; lets
// callers size per-worker accumulators.
unsigned plan_workers(std::size_t n, unsigned threads);

// Runs body(worker, begin, end) over a contiguous partition of [0, n) with
// worker in [0, plan_workers(n, threads)). The caller's combined result must
// not depend on the partition; exceptions from workers are rethrown on the
// calling thread.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace posguess
