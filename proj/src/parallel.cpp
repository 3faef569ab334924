#include "subdivtp/parallel.hpp"

#include <atomic>

namespace subdivtp {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
  g_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

int hardware_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace subdivtp
