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

#include "powerlab/parallel.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "powerlab/errors.hpp"

namespace powerlab {

int thread_budget() {
  if (const char* env = std::getenv("POWERLAB_THREADS")) {
    const std::string text(env);
    bool digits = !text.empty();
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    }
    unsigned long value = 0;
    if (digits) {
      try {
        value = std::stoul(text);
      } catch (const std::out_of_range&) {
        digits = false;
      }
    }
    if (!digits || value == 0) {
      throw InvalidInputError(
          "POWERLAB_THREADS must be a positive integer, got \"" + text +
          "\"");
    }
    return static_cast<int>(std::min(value, 1024ul));
  }
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware == 0 ? 1 : static_cast<int>(hardware);
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body) {
  const unsigned budget = thread_budget();
  const std::size_t workers =
      std::min<std::size_t>(budget, count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace powerlab
