#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gsc {

// Number of threads to actually run: the request itself, or one per
// hardware slot when the request is 0 or negative. Oversubscription is
// allowed deliberately; the determinism contract is exercised by running
// more threads than cores.
int resolve_workers(int requested);

// Evaluates fn(0..n-1) across `workers` threads and returns the results in
// index order. Each index writes only its own slot, so the output bytes are
// identical no matter how the indices interleave; with workers == 1 the loop
// runs inline. The first exception thrown by any task is rethrown after all
// threads join.
template <typename Fn>
auto parallel_map(int n, int workers, Fn&& fn)
    -> std::vector<decltype(fn(0))> {
  using T = decltype(fn(0));
  std::vector<T> out(static_cast<std::size_t>(n > 0 ? n : 0));
  if (n <= 0) return out;
  workers = resolve_workers(workers);
  if (workers == 1 || n == 1) {
    for (int i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto body = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n) break;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  int n_threads = std::min(workers, n);
  pool.reserve(n_threads);
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace gsc
