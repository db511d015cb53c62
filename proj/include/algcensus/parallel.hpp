#pragma once

#include <functional>

namespace algcensus {

// Global worker count for block-parallel loops.  Defaults to the
// ALGCENSUS_THREADS environment variable, else the hardware concurrency.
int thread_count();
void set_thread_count(int t);

// Runs fn(block) for block in [0, nblocks).  Blocks are claimed dynamically
// by the workers; callers must make fn's side effects a pure function of the
// block index so results never depend on the schedule.
void parallel_blocks(long long nblocks, const std::function<void(long long)>& fn);

}  // namespace algcensus
