#pragma once

#include <cstddef>
#include <functional>

namespace fclab {

/// Worker count: FC_LAB_THREADS if set (>=1), else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, count) across workers. Each index must write only
/// to its own slot so the result is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace fclab
