#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vwapgamma {

/// Number of workers used when a caller passes 0.
inline unsigned default_worker_count() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls task(i) for every i in [0, count) on up to `workers` threads.
///
/// Tasks are handed out dynamically, so `task` must write its result to a
/// slot owned by index i; any reduction happens afterwards in index order.
/// The first exception thrown by a task is rethrown on the calling thread.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  if (workers == 0) workers = default_worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  if (failure) std::rethrow_exception(failure);
}

/// Kahan-compensated accumulator.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace vwapgamma
