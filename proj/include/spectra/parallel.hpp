#pragma once

#include <cstddef>
#include <functional>

namespace spectra {

// Worker count: hardware concurrency, capped by SPECTRA_LEASE_THREADS.
unsigned thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget. fn must touch only
// index-owned state; callers reduce results in index order so output does
// not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spectra
