#pragma once

#include <cstddef>
#include <functional>

namespace qlat {

/// Worker count: QLAT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Splits [0, n) into contiguous chunks, one per worker.  Each index is
/// visited exactly once; chunk boundaries depend only on n and the worker
/// count, so results written by index are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace qlat
