#ifndef PW_DETAIL_PARALLEL_HPP
#define PW_DETAIL_PARALLEL_HPP

#include <exception>
#include <mutex>

namespace pw::detail {

/// Runs body(i) for i in [0, n) on OpenMP threads. The first exception
/// thrown by any iteration is rethrown on the calling thread after the loop.
template <class Body>
void parallel_for(long n, Body&& body) {
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace pw::detail

#endif // PW_DETAIL_PARALLEL_HPP
