#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace subdivtp {

// Global worker count used by the parallel helpers. Defaults to 1; the CLI
// sets it from --threads / SUBDIV_TP_THREADS. Results never depend on it.
int thread_count();
void set_thread_count(int n);
int hardware_thread_count();

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> split_blocks(
    std::size_t n, int workers) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  if (n == 0) return blocks;
  std::size_t w = workers < 1 ? 1 : static_cast<std::size_t>(workers);
  if (w > n) w = n;
  const std::size_t chunk = (n + w - 1) / w;
  for (std::size_t lo = 0; lo < n; lo += chunk)
    blocks.emplace_back(lo, std::min(lo + chunk, n));
  return blocks;
}

}  // namespace detail

// Splits [0, n) into contiguous blocks, applies `body(lo, hi)` to each and
// merges the per-block results in block (index) order, so the outcome is
// identical for every worker count.
template <class R, class Body, class Merge>
R block_map_reduce(std::size_t n, R init, Body&& body, Merge&& merge) {
  const auto blocks = detail::split_blocks(n, thread_count());
  if (blocks.empty()) return init;
  std::vector<R> results(blocks.size());
  if (blocks.size() == 1) {
    results[0] = body(blocks[0].first, blocks[0].second);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      pool.emplace_back([&, b] { results[b] = body(blocks[b].first, blocks[b].second); });
    for (auto& t : pool) t.join();
  }
  R acc = std::move(init);
  for (auto& r : results) acc = merge(std::move(acc), std::move(r));
  return acc;
}

}  // namespace subdivtp
