#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace irack {

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  }
  pool.clear();
  return out;
}

}  // namespace irack
