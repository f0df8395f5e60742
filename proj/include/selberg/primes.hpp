#pragma once

#include <cstdint>
#include <algorithm>
#include <thread>
#include <vector>

namespace selberg {

// Sieve of Eratosthenes; primes in [2, n].
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Runs body(begin, end, slot) over `threads` contiguous slices of [0, n).
// Slot k always receives the k-th slice, so callers that write into
// per-slot storage and merge in slot order get the same result for any
// thread count.
template <class Body>
void parallel_slices(std::size_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n < 2) {
    body(std::size_t{0}, n, 0U);
    return;
  }
  const std::size_t per = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) {
    const std::size_t begin = std::min(n, per * k);
    const std::size_t end = std::min(n, begin + per);
    pool.emplace_back([&body, begin, end, k] { body(begin, end, k); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace selberg
