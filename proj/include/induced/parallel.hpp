#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace induced {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(worker, workers) on `workers` threads and rethrows the first failure.
/// Callers stripe their own index space and merge per-worker state afterwards.
template <typename Body>
void run_workers(unsigned workers, Body&& body) {
  workers = resolve_threads(workers);
  if (workers == 1) {
    body(0u, 1u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace induced
