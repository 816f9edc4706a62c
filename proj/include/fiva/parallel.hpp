// Static-chunked parallel loop. Callers must write only to disjoint slots;
// combined with fixed-order reductions this keeps results independent of the
// worker count.
#pragma once

#include <cstddef>
#include <functional>

namespace fiva {

// Worker count resolution order: explicit argument > FIVA_WORKERS env var >
// hardware concurrency.
unsigned resolve_worker_count(unsigned requested);

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace fiva
