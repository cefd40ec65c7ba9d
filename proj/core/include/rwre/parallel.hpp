#pragma once

#include <cstddef>
#include <functional>

namespace rwre {

// Runs fn(chunk_index) for chunk_index in [0, n_chunks) on up to `workers`
// threads (clamped to hardware when 0).  Chunks are claimed from a shared
// atomic counter; callers must write results keyed by chunk index so the
// assembled output is independent of scheduling.
void parallel_for_chunks(std::size_t n_chunks, int workers,
                         const std::function<void(std::size_t)>& fn);

int resolve_workers(int requested);

// Pairwise tree reduction in fixed index order; the result depends only on
// the input sequence, not on how the inputs were produced.
double pairwise_sum(const double* data, std::size_t n);

}  // namespace rwre
