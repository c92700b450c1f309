#include "sdwt/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace sdwt {
namespace {

std::atomic<std::size_t> g_threads{0};

// Set on worker threads; nested parallel loops then run serially.
thread_local bool t_in_worker = false;

std::size_t env_threads() {
  if (const char* env = std::getenv("SDWT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void set_thread_count(std::size_t n) { g_threads.store(n); }

std::size_t thread_count() {
  const std::size_t n = g_threads.load();
  return n == 0 ? env_threads() : n;
}

namespace detail {

void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& task) {
  if (chunks == 0) return;
  const std::size_t workers = t_in_worker ? 1 : std::min(thread_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) task(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_chunk = chunks;
  std::exception_ptr error;

  auto worker = [&] {
    const bool was_worker = t_in_worker;
    t_in_worker = true;
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) break;
      try {
        task(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (c < error_chunk) {
          error_chunk = c;
          error = std::current_exception();
        }
      }
    }
    t_in_worker = was_worker;
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail
}  // namespace sdwt
