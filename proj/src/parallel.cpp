#include "boundcal/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace boundcal {

std::size_t worker_count() {
  if (const char* env = std::getenv("BOUNDCAL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn) {
  if (end <= begin) return;
  const std::size_t total = end - begin;
  const std::size_t workers = std::min(worker_count(), total);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= end) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace boundcal
