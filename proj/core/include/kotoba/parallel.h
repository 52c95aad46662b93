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

#ifndef KOTOBA_PARALLEL_H_
#define KOTOBA_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace kotoba {

// Calls `fn(i)` for every i in [0, n) using up to `workers` threads.
//
// `fn` must write only to state owned by index i; results are then
// identical for any worker count. If any call throws, the exception from
// the lowest failing index is rethrown after all threads have joined.
void ParallelFor(size_t n, int workers,
                 const std::function<void(size_t)>& fn);

}  // namespace kotoba

#endif  // KOTOBA_PARALLEL_H_
