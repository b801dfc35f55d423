/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstddef>
#include <functional>

namespace hyperalg {

/// Thread budget: HYPERALG_THREADS when set (>=1), else hardware concurrency.
std::size_t max_threads();

/**
 * Runs fn(0..count-1) on up to `threads` workers (0 = max_threads()).
 * Tasks must be independent and write only to their own slots; results are
 * then identical at any parallelism level. Exceptions are rethrown.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = 0);

} // namespace hyperalg
