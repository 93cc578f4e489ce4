#pragma once

#include <cstddef>
#include <functional>

namespace core_entropy {

// Number of worker threads: hardware concurrency, capped by the
// CORE_ENTROPY_THREADS environment variable when it holds a positive integer.
std::size_t worker_count();

// Calls body(i) for every i in [0, n). Indices are handed out in contiguous
// chunks; callers that write results into slot i get deterministic output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t chunk = 64);

}  // namespace core_entropy
