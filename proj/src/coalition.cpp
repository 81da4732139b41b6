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

#include "powerlab/coalition.hpp"

#include <sstream>

#include "powerlab/errors.hpp"

namespace powerlab {

namespace {

std::uint32_t mask_of(const int* begin, const int* end) {
  std::uint32_t mask = 0;
  for (const int* p = begin; p != end; ++p) {
    if (*p < 1 || *p > Coalition::kMaxPlayers) {
      throw InvalidInputError("player index " + std::to_string(*p) +
                              " outside 1.." +
                              std::to_string(Coalition::kMaxPlayers));
    }
    mask |= std::uint32_t{1} << (*p - 1);
  }
  return mask;
}

}  // namespace

Coalition Coalition::of(std::initializer_list<int> players) {
  return Coalition(mask_of(players.begin(), players.end()));
}

Coalition Coalition::of(const std::vector<int>& players) {
  return Coalition(mask_of(players.data(), players.data() + players.size()));
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= kMaxPlayers; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Coalition::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : players()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace powerlab
