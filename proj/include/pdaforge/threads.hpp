#pragma once

#include <functional>

namespace pdaforge {

/// Worker count: PDA_FORGE_THREADS if set (clamped to >= 1), else all cores.
int thread_budget();

/// Splits [0, count) into contiguous chunks and runs fn(chunk_index, begin,
/// end) on up to thread_budget() threads. Chunk boundaries depend only on
/// count and the budget, so per-chunk results can be merged deterministically
/// by chunk index. Runs inline when a single chunk suffices.
void parallel_chunks(long long count,
                     const std::function<void(int, long long, long long)>& fn);

/// Number of chunks parallel_chunks would use for `count` items.
int chunk_count(long long count);

}  // namespace pdaforge
