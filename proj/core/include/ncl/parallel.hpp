// parallel.hpp
// Thread pool helper honoring the NCL_THREADS environment variable.
// NCL_THREADS=0 (the default) runs everything sequentially; with k > 1 threads,
// work items write into preassigned slots and reductions run in index order,
// so parallel results are identical to sequential ones.
#pragma once

#include <cstdint>
#include <functional>

namespace ncl {

/// Number of worker threads requested via NCL_THREADS (0 or 1 = sequential).
int thread_count();

/// Runs f(i) for i in [0, n). Partitioned across threads when enabled.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& f);

}  // namespace ncl
