#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace idg {

// Runs fn(p) for p = 0..partitions-1 on up to `threads` workers. Partitioning
// is fixed by the caller and results live in caller-owned slots, so outputs do
// not depend on the worker count.
inline void run_partitioned(int partitions, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || partitions <= 1) {
    for (int p = 0; p < partitions; ++p) fn(p);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int p = next.fetch_add(1); p < partitions; p = next.fetch_add(1)) fn(p);
  };
  std::vector<std::thread> pool;
  int count = std::min(threads, partitions);
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace idg
