// Copyright 2026 The powerlab Authors
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

#ifndef POWERLAB_PARALLEL_HPP
#define POWERLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace powerlab {

/// Worker count for corpus sweeps: POWERLAB_THREADS when set (a positive
// integer; anything else is InvalidInputError), otherwise the hardware
// concurrency, at least 1.
int thread_budget();

// Runs body(i) for every i in [0, count), striped across at most
// thread_budget() threads. Callers keep determinism by writing only to
// per-i slots; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace powerlab

#endif  // POWERLAB_PARALLEL_HPP
