#pragma once

// Loop drivers shared by the kernels. The serial branch is the reference;
// the OpenMP branch must produce the same value for any thread count.

#include <cstdint>
#include <exception>
#include <vector>

#include "pantslab/exec.hpp"

namespace pantslab::detail {

template <class Fn>
std::uint64_t sum_over(std::size_t n, Exec exec, Fn&& fn) {
  std::uint64_t total = 0;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) total += fn(i);
    return total;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      total += fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(pantslab_sum_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return total;
}

/// Fills out[i] = fn(i). Exceptions escaping fn are rethrown after the loop
/// (the lowest index wins, so the reported error is deterministic).
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace pantslab::detail
