#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qdissect {

// Worker cap: QDISSECT_THREADS when set (minimum 1), otherwise the hardware
// concurrency.
std::size_t worker_cap();

// Runs task(i) for i in [0, count) on up to worker_cap() threads. Callers
// make results deterministic by writing into slot i, never by output order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace qdissect
