#pragma once

#include <cstddef>
#include <functional>

namespace colorder {

/// Worker count used when a config asks for 0 threads.
unsigned default_thread_count();

/// Runs body(worker, index) for every index in [0, count) on up to `threads`
/// workers (0 = default_thread_count()). Indices are handed out dynamically,
/// so callers must write results to per-index slots or per-worker buffers and
/// reduce them in a fixed order afterwards. `worker` is in [0, workers) where
/// workers = resolve_threads(threads, count). The first exception thrown by a
/// body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(unsigned worker, std::size_t index)>& body);

/// Number of workers parallel_for will actually start.
unsigned resolve_threads(unsigned threads, std::size_t count);

}  // namespace colorder
