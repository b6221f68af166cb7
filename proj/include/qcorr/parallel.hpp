#pragma once

#include <cstddef>
#include <functional>

namespace qcorr {

// Number of worker threads: hardware concurrency, capped by the
// QCORR_THREADS environment variable when set to a positive integer.
std::size_t worker_count();

// Runs body(i) for every i in [0, n) across worker_count() threads.
// Iterations must be independent; callers that aggregate should have each
// iteration write to its own slot and reduce sequentially afterwards, so
// results do not depend on the thread count.  Exceptions thrown by body are
// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qcorr
