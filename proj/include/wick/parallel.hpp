// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WICK_PARALLEL_HPP
#define WICK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wick {

// Process-wide worker count used by the parallel kernels (default 1).
// Results never depend on it: work is split into fixed-size chunks whose
// partial results are reduced in chunk order.
void set_thread_count(unsigned n);
unsigned thread_count() noexcept;

// Runs task(k) for k in [0, n_tasks), possibly concurrently. The first
// exception thrown by any task is rethrown after all workers have joined.
void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)> &task);

}  // namespace wick

#endif  // WICK_PARALLEL_HPP
