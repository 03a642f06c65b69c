#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace compnorm::detail {

// Runs body(chunk, begin, end) over fixed contiguous chunks of [0, n). Chunk
// boundaries depend only on n and `chunks`, so callers that write per-index
// or per-chunk results get the same output on any thread count.
template <typename Body>
void parallel_chunks(std::size_t n, std::size_t chunks, Body body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    body(c, begin, end);
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace compnorm::detail
