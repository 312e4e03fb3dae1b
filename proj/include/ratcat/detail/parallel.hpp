#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "ratcat/lattice.hpp"

namespace ratcat::detail {

/// Runs fn(top_row_length) for every possible top-row length and returns the
/// results indexed by that length. Slices are independent, so any worker
/// count produces the same vector; callers merge it in index order to keep
/// output deterministic.
template <typename T, typename SliceFn>
std::vector<T> map_top_slices(const CoprimePair& pair, int parallelism, SliceFn&& fn) {
  const int slice_count = positive_prefix(pair, pair.n()) + 1;
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(slice_count));

  const int workers = std::max(1, std::min(parallelism, slice_count));
  if (workers == 1) {
    for (int top = 0; top < slice_count; ++top) {
      slots[static_cast<std::size_t>(top)] = fn(top);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const int top = next.fetch_add(1);
        if (top >= slice_count) return;
        try {
          slots[static_cast<std::size_t>(top)] = fn(top);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
    if (error) std::rethrow_exception(error);
  }

  std::vector<T> results;
  results.reserve(slots.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace ratcat::detail
