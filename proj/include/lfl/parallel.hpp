#pragma once

#include <cstddef>
#include <functional>

namespace lfl {

/// Worker count: LFL_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Run body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into per-index slots and reduce afterwards in index order,
/// which keeps every sweep bit-stable regardless of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lfl
