// Copyright 2026 The polypack authors.
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

#ifndef POLYPACK_PARALLEL_HPP
#define POLYPACK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polypack {

// Worker count: POLYPACK_THREADS if set (>=1), else hardware concurrency
// clamped to [1, 8].
int thread_budget();

// Runs fn(begin, end) over a partition of [0, n).  Results must be keyed by
// index so the outcome is independent of scheduling.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace polypack

#endif  // POLYPACK_PARALLEL_HPP
