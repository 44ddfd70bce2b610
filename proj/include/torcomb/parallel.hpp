#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace torcomb {

// Runs f(0..n-1) on up to `jobs` worker threads. Tasks must write to
// disjoint slots; the first exception is rethrown on the caller.
template <class F>
void parallel_for(int n, int jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> workers;
  const int nw = std::min(jobs, n);
  workers.reserve(nw);
  for (int t = 0; t < nw; ++t) workers.emplace_back(work);
  for (auto& w : workers) w.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace torcomb
