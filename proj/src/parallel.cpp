#include "s4lie/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace s4lie {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) { g_threads = std::max(1u, n); }
unsigned thread_count() { return g_threads; }

std::optional<std::size_t> find_first_failure(std::size_t count, const std::function<bool(std::size_t)>& ok) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(g_threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  constexpr std::size_t chunk = 16;
  auto worker = [&] {
    try {
      for (;;) {
        std::size_t start = next.fetch_add(chunk);
        if (start >= count || start >= best.load()) return;
        std::size_t stop = std::min(count, start + chunk);
        for (std::size_t i = start; i < stop && i < best.load(); ++i) {
          if (!ok(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best = 0;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == count) return std::nullopt;
  return best.load();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  find_first_failure(count, [&](std::size_t i) {
    body(i);
    return true;
  });
}

}  // namespace s4lie
