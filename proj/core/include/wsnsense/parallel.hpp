#ifndef WSNSENSE_PARALLEL_HPP
#define WSNSENSE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wsnsense {

// Runs fn(i) for i in [0, count) on `workers` threads. Work is handed out
// by an atomic counter; fn must write results only to slot i, which keeps
// the output independent of the worker count. The lowest-index exception
// wins so failures are reported deterministically.
template <typename Fn>
void parallel_for_index(std::size_t count, int workers, Fn&& fn) {
  if (count == 0) return;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_index = count;
  std::exception_ptr err;

  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  const auto n = static_cast<std::size_t>(workers);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();

  if (err) std::rethrow_exception(err);
}

}  // namespace wsnsense

#endif
