/// @file
/// @brief Bounded worker pool for independent work items.

#pragma once

#include <cstddef>
#include <functional>

namespace tma {

/// Worker count from TMA_THREADS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(0..count-1) on up to `workers` threads. The first exception thrown
/// by any item is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

}  // namespace tma
