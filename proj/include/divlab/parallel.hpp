#pragma once

#include <exception>
#include <mutex>

namespace divlab {

/// Runs body(i) for i in [0, count) across OpenMP threads. The first
/// exception (by index) is rethrown on the calling thread once the loop ends.
template <typename Body>
void parallel_for(int count, Body&& body) {
  std::exception_ptr first;
  int first_index = count;
  std::mutex mutex;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(mutex);
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace divlab
