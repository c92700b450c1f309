#pragma once

// Thread-count control and reductions whose results do not depend on the
// number of worker threads. Work is always split into chunks whose
// boundaries depend only on the problem size; partial results are combined
// by a fixed-shape pairwise tree.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace sdwt {

// 0 means "use SDWT_THREADS, else hardware concurrency".
void set_thread_count(std::size_t n);
std::size_t thread_count();

namespace detail {
// Runs task(c) for c in [0, chunks) on up to thread_count() workers.
// Rethrows the exception of the lowest failing chunk.
void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& task);
}  // namespace detail

template <class F>
void parallel_for(std::size_t n, F&& body) {
  detail::run_chunks(n, [&](std::size_t i) { body(i); });
}

template <class T>
T pairwise_sum(std::span<const T> terms) {
  constexpr std::size_t kLeaf = 8;
  if (terms.empty()) return T{};
  if (terms.size() <= kLeaf) {
    T acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc += terms[i];
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  T left = pairwise_sum(terms.first(half));
  left += pairwise_sum(terms.subspan(half));
  return left;
}

template <class T>
T pairwise_sum(const std::vector<T>& terms) {
  return pairwise_sum(std::span<const T>(terms));
}

// Folds `accumulate(acc, i)` over i in [0, n) in fixed chunks of `chunk`
// items, then sums the chunk partials pairwise. `zero` seeds every chunk
// (it must be the additive identity with the right shape).
template <class T, class Acc>
T chunked_reduce(std::size_t n, std::size_t chunk, const T& zero, Acc&& accumulate) {
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<T> partial(chunks, zero);
  detail::run_chunks(chunks, [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    T& acc = partial[c];
    for (std::size_t i = lo; i < hi; ++i) accumulate(acc, i);
  });
  if (partial.empty()) return zero;
  return pairwise_sum(std::span<const T>(partial));
}

}  // namespace sdwt
