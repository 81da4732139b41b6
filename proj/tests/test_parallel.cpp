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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "powerlab/errors.hpp"
#include "powerlab/parallel.hpp"

using namespace powerlab;

namespace {

// Restores the prior POWERLAB_THREADS value when the scope closes, so a
// failing case cannot poison later suites.
class ScopedThreadsVar {
 public:
  explicit ScopedThreadsVar(const char* value) {
    if (const char* prior = std::getenv("POWERLAB_THREADS")) {
      prior_ = prior;
    }
    if (value == nullptr) {
      ::unsetenv("POWERLAB_THREADS");
    } else {
      ::setenv("POWERLAB_THREADS", value, 1);
    }
  }
  ~ScopedThreadsVar() {
    if (prior_.empty()) {
      ::unsetenv("POWERLAB_THREADS");
    } else {
      ::setenv("POWERLAB_THREADS", prior_.c_str(), 1);
    }
  }

 private:
  std::string prior_;
};

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("the default budget is at least one thread") {
  ScopedThreadsVar guard(nullptr);
  CHECK(thread_budget() >= 1);
}

TEST_CASE("the environment variable sets the budget") {
  ScopedThreadsVar guard("3");
  CHECK(thread_budget() == 3);
}

TEST_CASE("oversized budgets are capped") {
  ScopedThreadsVar guard("100000");
  CHECK(thread_budget() == 1024);
}

TEST_CASE("invalid budgets are rejected with the offending text") {
  for (const char* bad : {"0", "abc", "", "-2", "1.5", "3 ",
                          "999999999999999999999999999"}) {
    ScopedThreadsVar guard(bad);
    CAPTURE(bad);
    try {
      thread_budget();
      FAIL("accepted POWERLAB_THREADS=" << bad);
    } catch (const InvalidInputError& e) {
      CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
  }
}

TEST_CASE("every iteration runs exactly once") {
  for (const char* threads : {"1", "4"}) {
    ScopedThreadsVar guard(threads);
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) {
      CHECK(h.load() == 1);
    }
  }
}

TEST_CASE("zero iterations is a no-op") {
  std::atomic<int> calls{0};
  parallel_for(0, [&](std::size_t) { calls.fetch_add(1); });
  CHECK(calls.load() == 0);
}

TEST_CASE("a worker exception reaches the caller") {
  ScopedThreadsVar guard("4");
  try {
    parallel_for(64, [](std::size_t i) {
      if (i == 17) {
        throw std::runtime_error("boom at 17");
      }
    });
    FAIL("no exception propagated");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "boom at 17");
  }
}

}  // TEST_SUITE
