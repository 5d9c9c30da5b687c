#ifndef GIRARD_PARALLEL_HPP
#define GIRARD_PARALLEL_HPP

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace girard {

/// Runs fn(i) for i in [0, n), split over hardware threads in contiguous
/// chunks. fn must not touch shared mutable state except through its own
/// synchronization. Falls back to a plain loop for small n.
template <typename Fn>
void parallel_for(int n, Fn&& fn, int grain = 256) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || n <= grain) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min<int>(static_cast<int>(hw), (n + grain - 1) / grain);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  int chunk = (n + workers - 1) / workers;
  auto run = [&fn](int lo, int hi) {
    for (int i = lo; i < hi; ++i) fn(i);
  };
  for (int w = 1; w < workers; ++w) {
    int lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(run, lo, hi);
  }
  run(0, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

/// Parallel exhaustive law check: returns the first index (by value, not by
/// schedule) for which pred(i) is false, or -1 when all pass.
template <typename Pred>
int parallel_find_violation(int n, Pred&& pred, int grain = 256) {
  std::vector<int> hits;
  std::mutex m;
  parallel_for(
      n,
      [&](int i) {
        if (!pred(i)) {
          std::lock_guard<std::mutex> lock(m);
          hits.push_back(i);
        }
      },
      grain);
  if (hits.empty()) return -1;
  return *std::min_element(hits.begin(), hits.end());
}

}  // namespace girard

#endif
