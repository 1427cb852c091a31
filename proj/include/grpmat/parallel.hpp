#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace grpmat {

/// Worker cap: GRPMAT_THREADS when set to a positive integer, else the
/// hardware concurrency. Never changes results, only how they are computed.
inline int max_threads() {
  if (const char* env = std::getenv("GRPMAT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(0..count-1), spreading indices over at most max_threads() workers.
/// Callers write into per-index slots and reduce in index order afterwards.
inline void parallel_for(int count, const std::function<void(int)>& task) {
  const int workers = std::min(max_threads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace grpmat
