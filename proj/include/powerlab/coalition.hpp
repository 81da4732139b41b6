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

#ifndef POWERLAB_COALITION_HPP
#define POWERLAB_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace powerlab {

// A set of players out of {1,...,n}, stored as a bitmask with player i at
// bit i-1. Full 2^n enumerations cap n at 24.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 24;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static constexpr Coalition empty() { return Coalition(0); }
  static constexpr Coalition grand(int n) {
    return Coalition((std::uint32_t{1} << n) - 1);
  }
  // Players are 1-indexed. Throws InvalidInputError on an index outside 1..24.
  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(int player) const {
    return (mask_ >> (player - 1)) & 1u;
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & other.mask_) == mask_;
  }
  constexpr Coalition with(int player) const {
    return Coalition(mask_ | (std::uint32_t{1} << (player - 1)));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~(std::uint32_t{1} << (player - 1)));
  }
  constexpr Coalition unite(Coalition other) const {
    return Coalition(mask_ | other.mask_);
  }
  constexpr Coalition intersect(Coalition other) const {
    return Coalition(mask_ & other.mask_);
  }
  constexpr Coalition complement_in(int n) const {
    return Coalition(~mask_ & grand(n).mask_);
  }

  // Ascending 1-indexed member list.
  std::vector<int> players() const;

  // "{1,3,4}" or "{}".
  std::string to_string() const;

  friend constexpr bool operator==(Coalition a, Coalition b) = default;

 private:
  std::uint32_t mask_ = 0;
};

// The canonical order for coalition lists: by cardinality, then by mask
// value ascending.
constexpr bool canonical_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask() < b.mask();
}

}  // namespace powerlab

#endif  // POWERLAB_COALITION_HPP
