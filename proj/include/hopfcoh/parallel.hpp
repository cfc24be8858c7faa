#pragma once

#include <cstddef>
#include <functional>

namespace hopfcoh {

/// Worker count for parallel_for; defaults to the hardware concurrency.
unsigned jobs();
void set_jobs(unsigned n);

/// Runs fn(i) for i in [0, count). Exceptions are rethrown (the one with smallest i wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hopfcoh
