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

#ifndef POWERLAB_ERRORS_HPP
#define POWERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powerlab {

// Malformed or contradictory input: bad game data, unknown index ids,
// violated preconditions. Maps to CLI exit status 1.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented size cap was exceeded (player counts, corpus sizes,
// LP dimensions). Maps to CLI exit status 2.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace powerlab

#endif  // POWERLAB_ERRORS_HPP
