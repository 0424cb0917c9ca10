#include "kakeya/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace kakeya {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_budget(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned thread_budget() { return g_threads.load(); }

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  const unsigned budget = thread_budget();
  if (budget <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(budget, n));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace kakeya
