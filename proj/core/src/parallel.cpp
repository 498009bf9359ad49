#include "quatgraphs/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quatgraphs {

namespace {
int g_threads = 0;  // 0 = uninitialized -> hardware concurrency
}

void set_thread_count(int n) { g_threads = n < 1 ? 1 : n; }

int thread_count() {
  if (g_threads == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    g_threads = hw ? (int)hw : 1;
  }
  return g_threads;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace quatgraphs
