#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace caylabel {

inline int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for every i in [0, count) using the given number of workers.
// Indices are claimed from a shared counter, so fn must write its result to
// a slot owned by the index; with that convention the combined outcome is
// deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  workers = effective_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::size_t>(count, workers));
  pool.reserve(static_cast<std::size_t>(spawn) - 1);
  for (int w = 1; w < spawn; ++w) pool.emplace_back(body);
  body();
  for (std::thread& t : pool) t.join();
}

}  // namespace caylabel
