#pragma once

#include <cstddef>
#include <functional>

namespace paley {

// PALEY_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t worker_count();

// Calls fn(i) for every i in [0, n), spread over worker_count() threads.
// fn must only write state owned by index i; results are then independent
// of the thread count. If calls throw, the exception of the smallest
// failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace paley
