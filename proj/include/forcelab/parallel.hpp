#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace forcelab {

/// Calls fn(i) for every i in [0, count) on up to `workers` threads. Indices
/// are claimed from a shared counter, so callers must not depend on which
/// thread runs which index; results go into per-index slots.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      fn(i);
  };
  const unsigned spawned =
      static_cast<unsigned>(std::min<std::size_t>(workers, count)) - 1;
  std::vector<std::jthread> pool;
  pool.reserve(spawned);
  for (unsigned t = 0; t < spawned; ++t) pool.emplace_back(body);
  body();
}

/// Lowers `target` to `value` if smaller.
inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace forcelab
