#ifndef FAIRAGG_PARALLEL_HPP_
#define FAIRAGG_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <optional>

namespace fairagg {

// Worker threads to use: FAIRAGG_THREADS if set to a positive integer,
// otherwise the hardware concurrency.
std::size_t worker_count();

// Smallest i in [0, count) with pred(i) true. Indices are handed out in
// increasing order and work past the best hit is skipped, so the answer does
// not depend on the number of workers. pred must be thread-safe.
std::optional<std::size_t> first_index_where(std::size_t count,
                                             const std::function<bool(std::size_t)>& pred);

}  // namespace fairagg

#endif  // FAIRAGG_PARALLEL_HPP_
