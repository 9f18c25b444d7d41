#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zeroprod::detail {

// Splits [0, count) into contiguous chunks, one per worker, and runs
// fn(chunk_index, begin, end). Chunk boundaries depend only on count and
// jobs, so callers that combine per-chunk results in chunk order get output
// independent of scheduling.
template <class Fn>
void for_each_chunk(std::uint64_t count, unsigned jobs, Fn&& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, count));
  const std::uint64_t chunk = count / workers;
  const std::uint64_t extra = count % workers;
  auto bounds = [&](std::uint64_t w) {
    const std::uint64_t begin = w * chunk + std::min(w, extra);
    return std::pair{begin, begin + chunk + (w < extra ? 1 : 0)};
  };
  if (workers == 1) {
    fn(std::uint64_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        auto [begin, end] = bounds(w);
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline unsigned chunk_count(std::uint64_t count, unsigned jobs) {
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, count)));
}

}  // namespace zeroprod::detail
