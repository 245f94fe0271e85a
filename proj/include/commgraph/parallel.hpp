#pragma once

#include <cstddef>
#include <functional>

namespace commgraph {

// Worker count from COMMGRAPH_THREADS, else the hardware concurrency.
std::size_t thread_count();

// Runs body(worker, worker_count) on each worker and joins. Workers must only
// write to disjoint state.
void run_workers(std::size_t workers, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace commgraph
