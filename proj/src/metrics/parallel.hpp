#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace padiam::detail {

// Splits [0, count) into `threads` contiguous blocks and runs
// body(block_index, begin, end) on each. Block boundaries depend only on
// (count, threads), and callers combine per-block results in block order.
template <typename Body>
void run_blocks(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  const std::size_t blocks =
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  if (blocks == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(blocks);
  workers.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t begin = count * b / blocks;
    const std::size_t end = count * (b + 1) / blocks;
    workers.emplace_back([&, b, begin, end] {
      try {
        body(b, begin, end);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace padiam::detail
