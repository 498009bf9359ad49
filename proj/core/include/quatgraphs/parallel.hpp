#ifndef QUATGRAPHS_PARALLEL_HPP
#define QUATGRAPHS_PARALLEL_HPP

#include <functional>

namespace quatgraphs {

// Global worker count for parallel sections (1 = serial).  Defaults to the
// hardware concurrency.  Output ordering never depends on this: work items
// write to preassigned slots and are gathered deterministically.
void set_thread_count(int n);
int thread_count();

// Runs fn(0..n-1), possibly concurrently.  fn must only touch its own slot.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace quatgraphs

#endif
