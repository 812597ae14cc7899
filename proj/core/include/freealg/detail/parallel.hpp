#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace freealg::detail {

// Runs body(i) for i in [0, count). With threads <= 1 this is a plain loop;
// otherwise a shared atomic counter feeds worker threads. Each index is
// processed exactly once, and callers write results into preallocated
// per-index slots, so the output is identical regardless of thread count.
inline void parallel_for(int count, int threads,
                         const std::function<void(int)>& body) {
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace freealg::detail
