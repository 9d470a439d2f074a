#include "ncl/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ncl {

int thread_count() {
  static const int cached = [] {
    const char* env = std::getenv("NCL_THREADS");
    if (!env) return 0;
    try {
      int v = std::stoi(env);
      return v < 0 ? 0 : v;
    } catch (...) {
      return 0;
    }
  }();
  return cached;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& f) {
  int workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (workers > n) workers = static_cast<int>(n);
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ncl
