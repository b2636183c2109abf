#pragma once

#include <cstddef>
#include <functional>

namespace htoda {

// Worker count: HURWITZ_TODA_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
int thread_cap();

// Runs fn over [0, n) split into contiguous chunks, one per worker.
// Serial when the cap is 1 or the range is small.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace htoda
