#ifndef BOUNDCAL_PARALLEL_HPP
#define BOUNDCAL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace boundcal {

// Worker cap: BOUNDCAL_THREADS when set (>= 1), hardware concurrency otherwise.
std::size_t worker_count();

// Runs fn(i) for i in [begin, end). Each index must write only its own output
// slots, so the result is identical for any worker count.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace boundcal

#endif
