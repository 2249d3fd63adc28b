#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qorder::detail {

/// Keeps the items satisfying `pred`, in their original order. Contiguous
/// chunks are scanned by separate threads and concatenated, so the output
/// is the same for every thread count.
template <class T, class Pred>
std::vector<T> parallel_filter(const std::vector<T>& items, Pred pred, unsigned threads) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, items.size() / 64 + 1));
  if (workers == 1) {
    std::vector<T> out;
    for (const auto& x : items) {
      if (pred(x)) out.push_back(x);
    }
    return out;
  }
  std::vector<std::vector<T>> parts(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(items.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          if (pred(items[i])) parts[w].push_back(items[i]);
        }
      });
    }
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace qorder::detail
