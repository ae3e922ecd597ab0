#ifndef SCALFORM_THREADPOOL_HPP
#define SCALFORM_THREADPOOL_HPP

#include <thread>
#include <atomic>
#include <vector>
#include <functional>
#include <cstdlib>
#include <string>

namespace scalform {

inline int worker_count()
{
  if (const char* env = std::getenv("SCALFORM_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

// Deterministic parallel map-reduce: the task partition and the reduction
// order are fixed by `chunks`, independent of how many workers run.
template <class T, class Fn, class Reduce>
T parallel_chunks(int chunks, Fn&& fn, Reduce&& reduce, T init)
{
  std::vector<T> results(chunks);
  int workers = std::min(worker_count(), chunks);
  if (workers <= 1) {
    for (int c = 0; c < chunks; ++c) results[c] = fn(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        while (true) {
          int c = next.fetch_add(1);
          if (c >= chunks) break;
          results[c] = fn(c);
        }
      });
    for (auto& t : pool) t.join();
  }
  T acc = init;
  for (int c = 0; c < chunks; ++c) acc = reduce(acc, results[c]);
  return acc;
}

} // namespace scalform

#endif
