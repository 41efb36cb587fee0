#pragma once

#include <cstddef>
#include <functional>

namespace ldl {

/// Worker count: LDL_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
int worker_count();

/// Calls body(i) for every i in [0, n), spread over worker_count() threads.
/// Nested calls run inline on the calling worker. If any call throws, the
/// exception from the smallest failing index is rethrown after all workers
/// have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ldl
