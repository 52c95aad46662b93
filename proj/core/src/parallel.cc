// Copyright 2026 The Kotoba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kotoba/parallel.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

namespace kotoba {

void ParallelFor(size_t n, int workers,
                 const std::function<void(size_t)>& fn) {
  const size_t threads =
      std::min(n, static_cast<size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  // Thread t owns indices t, t + threads, ... and stops at its first failure,
  // so the per-thread failure is the lowest failing index in its stride.
  struct Failure {
    size_t index = std::numeric_limits<size_t>::max();
    std::exception_ptr error;
  };
  std::vector<Failure> failures(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (size_t i = t; i < n; i += threads) {
          try {
            fn(i);
          } catch (...) {
            failures[t] = {i, std::current_exception()};
            return;
          }
        }
      });
    }
  }
  const auto first = std::min_element(
      failures.begin(), failures.end(),
      [](const Failure& a, const Failure& b) { return a.index < b.index; });
  if (first->error) std::rethrow_exception(first->error);
}

}  // namespace kotoba
