// Copyright 2026 The wickcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wick/parallel.hpp"

#include "wick/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wick {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "thread count must be positive");
  g_threads.store(n);
}

unsigned thread_count() noexcept { return g_threads.load(); }

void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)> &task) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n_tasks);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n_tasks; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < n_tasks; k = next++) {
      try {
        task(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_tasks;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wick
