#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace gexp::util {

// Splits [0, n) into contiguous chunks and runs fn(begin, end, worker) on each,
// one worker per thread. fn must only touch worker-local state; callers merge
// the per-worker results afterwards so the outcome is independent of the split.
inline void parallel_chunks(uint64_t n, unsigned threads,
                            const std::function<void(uint64_t, uint64_t, unsigned)>& fn) {
  if (threads <= 1 || n < 4096) {
    fn(0, n, 0);
    return;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned k = threads < hw ? threads : hw;
  if (static_cast<uint64_t>(k) > n) k = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(k);
  uint64_t chunk = n / k, rem = n % k, begin = 0;
  for (unsigned w = 0; w < k; ++w) {
    uint64_t len = chunk + (w < rem ? 1 : 0);
    uint64_t end = begin + len;
    pool.emplace_back(fn, begin, end, w);
    begin = end;
  }
  for (auto& t : pool) t.join();
}

inline uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return a | b;
  return a / std::gcd(a, b) * b;
}

}  // namespace gexp::util
