#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace arithmirror::detail {

// Runs fn(i) for i in [0, n), strided over `workers` threads. Callers write
// results into preallocated slots, so output order never depends on timing.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace arithmirror::detail
