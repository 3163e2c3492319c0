// Copyright 2026 The Vendi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VENDI_SRC_CORE_PARALLEL_HPP
#define VENDI_SRC_CORE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace vendi::detail {

// Runs body(row) for row in [0, count) over contiguous row blocks. Each row is
// handled by exactly one thread, so results do not depend on the thread count.
template <typename Body>
void parallel_rows(std::size_t count, std::size_t min_rows_per_thread,
                   Body&& body) {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t threads =
      std::min(hw, std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_rows_per_thread)));
  if (threads <= 1) {
    for (std::size_t r = 0; r < count; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  // Interleaved assignment balances triangular workloads.
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t r = t; r < count; r += threads) body(r);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace vendi::detail

#endif  // VENDI_SRC_CORE_PARALLEL_HPP
