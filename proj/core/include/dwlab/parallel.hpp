#pragma once

#include <cstddef>
#include <functional>

namespace dwlab {

/// Resolves a requested worker count: 0 means DW_LAB_THREADS if set, else
/// the hardware concurrency. Always at least 1.
unsigned resolve_threads(unsigned requested);

/// Calls body(i) for every i in [0, count) on up to `threads` workers. Each
/// index runs exactly once; if any call throws, the exception from the
/// smallest failing index is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace dwlab
