#pragma once

#include <cstddef>
#include <functional>

namespace clusternet {

/// Thread count from CLUSTERNET_THREADS, else hardware concurrency (>= 1).
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// handed out dynamically; the first exception thrown is rethrown after all
/// workers stop. Callers write results into per-index slots so the outcome
/// does not depend on scheduling.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace clusternet
