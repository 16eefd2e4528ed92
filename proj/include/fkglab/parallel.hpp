#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace fkglab {

// --workers / FKGLAB_WORKERS resolution: requested > 0 wins, then the
// environment variable, then 1.
int resolve_workers(int requested);

// Splits [begin, end) into at most `workers` contiguous ranges and runs
// fn(worker_index, lo, hi) on each, collecting results in range order so
// reductions stay deterministic. workers <= 1 runs inline.
template <typename R, typename Fn>
std::vector<R> run_partitioned(std::uint64_t begin, std::uint64_t end,
                               int workers, Fn fn) {
  std::uint64_t total = end - begin;
  if (workers > 1 && static_cast<std::uint64_t>(workers) > total)
    workers = total ? static_cast<int>(total) : 1;
  if (workers <= 1) {
    std::vector<R> out;
    out.push_back(fn(0, begin, end));
    return out;
  }
  std::vector<R> out(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = begin + total * w / workers;
    std::uint64_t hi = begin + total * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { out[w] = fn(w, lo, hi); });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace fkglab
