// Copyright 2026 The rrseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RRSEQ_PARALLEL_HPP
#define RRSEQ_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rrseq {

// Applies fn(i) for i in [0, count) across up to `threads` workers.  Results
// are assembled by index, so output order never depends on scheduling.  The
// first exception, if any, is rethrown on the calling thread.
template <typename Fn>
void parallel_for_index(std::size_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  std::size_t workers = threads > 1 ? static_cast<std::size_t>(threads) : 1;
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Default worker count: explicit argument, else the RRSEQ_THREADS
// environment variable, else the hardware concurrency.
int resolve_threads(int requested);

}  // namespace rrseq

#endif  // RRSEQ_PARALLEL_HPP
