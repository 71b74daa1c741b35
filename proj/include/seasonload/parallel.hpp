#pragma once

#include <cstddef>
#include <functional>

namespace seasonload {

/// Worker count for parallel sections: hardware concurrency, capped by the
/// SEASONLOAD_THREADS environment variable (re-read on every call so tests
/// can change it at runtime). Always at least 1.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one
/// per worker. Bodies must write only to disjoint, preallocated slots so the
/// result is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace seasonload
