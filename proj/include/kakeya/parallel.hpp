#pragma once

// Bounded internal parallelism. Results are written to caller-indexed slots
// and reductions happen in chunk order, so outputs never depend on the
// schedule or the thread budget.

#include <cstddef>
#include <functional>

namespace kakeya {

void set_thread_budget(unsigned n);  // 0 or 1 = sequential
unsigned thread_budget();

// Runs fn(i) for i in [0, n), split across at most thread_budget() threads.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace kakeya
