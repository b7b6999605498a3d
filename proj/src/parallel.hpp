#pragma once

// OpenMP loop helpers. Exceptions cannot cross an OpenMP region boundary, so
// the body runs inside a try block and the exception from the lowest index is
// rethrown after the loop; that matches what a serial loop would report.

#include <cstddef>
#include <exception>

namespace aptsim::detail {

enum class Schedule { Static, Dynamic };

template <typename Body>
void parallel_for(std::size_t count, Schedule schedule, Body&& body) {
  const auto n = static_cast<std::ptrdiff_t>(count);
  std::exception_ptr first_error;
  std::ptrdiff_t first_index = n;

  const auto guarded = [&](std::ptrdiff_t i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(aptsim_parallel_for_error)
      if (i < first_index) {
        first_index = i;
        first_error = std::current_exception();
      }
    }
  };

  if (schedule == Schedule::Static) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) guarded(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) guarded(i);
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace aptsim::detail
