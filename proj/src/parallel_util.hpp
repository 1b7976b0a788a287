#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace simplexnet::detail {

// Splits [0, total) into fixed chunks (independent of thread count) and runs
// `work(chunk_index, begin, end)` concurrently. Results must be merged by the
// caller in chunk order so output stays deterministic.
template <typename Work>
void run_chunked(std::uint64_t total, int n_chunks, Work&& work) {
  if (total == 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futures;
  const std::uint64_t chunk = (total + n_chunks - 1) / n_chunks;
  int next = 0;
  while (next < n_chunks) {
    futures.clear();
    for (unsigned t = 0; t < hw && next < n_chunks; ++t, ++next) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(next);
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) continue;
      futures.push_back(std::async(std::launch::async, [&work, next, begin, end] {
        work(next, begin, end);
      }));
    }
    for (auto& f : futures) f.get();
  }
}

}  // namespace simplexnet::detail
