#pragma once

#include <cstddef>
#include <functional>

namespace prodset {

// Worker count: PRODUCTSET_THREADS if set (positive integer), otherwise the
// hardware concurrency, at least 1.
std::size_t worker_count();

// Runs body(begin, end) over disjoint chunks of [0, n) on worker_count()
// threads.  Callers own determinism: results must not depend on the chunking
// (canonical sort/merge before returning).
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace prodset
