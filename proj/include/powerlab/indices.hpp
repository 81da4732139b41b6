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

#ifndef POWERLAB_INDICES_HPP
#define POWERLAB_INDICES_HPP

#include <functional>
#include <string>
#include <vector>

#include "powerlab/game.hpp"
#include "powerlab/rational.hpp"

namespace powerlab {

// One exact rational per player.
struct PowerVector {
  std::vector<Rational> values;

  int num_players() const { return static_cast<int>(values.size()); }
  Rational sum() const;

  friend bool operator==(const PowerVector& a, const PowerVector& b) = default;
};

// Which family of coalitions a counting scheme credits.
enum class CoalitionType {
  kWinning,
  kCriticalPerPlayer,  // winning coalitions, credited to critical members only
  kMinimalWinning,
  kShiftMinimalWinning,  // requires a complete game
};

enum class Transform {
  kRawCount,        // each credited player receives 1 per coalition
  kEqualDivision,   // each credited player receives 1/(number credited)
  kCardinalityWeighted,  // each credited player receives size_weights[|U|]
};

// The generic engine: count coalitions of a chosen type, transform each
// coalition's contribution, optionally normalize to sum 1.
struct CountingScheme {
  CoalitionType selector = CoalitionType::kMinimalWinning;
  Transform transform = Transform::kRawCount;
  // Entry s-1 weights coalitions of size s; must cover sizes 1..n exactly
  // when the transform is cardinality-weighted and be absent otherwise.
  std::vector<Rational> size_weights;
  bool normalize = false;
};

PowerVector count_index(const SimpleGame& v, const CountingScheme& scheme);

// Share of minimal-winning-coalition memberships (normalized raw counts).
PowerVector pgi(const SimpleGame& v);

// Minimal-winning counting with equal division inside each coalition.
PowerVector deegan_packel(const SimpleGame& v);

enum class BanzhafVariant { kRaw, kNormalized };

// Criticality counting: raw divides each player's swing count by 2^(n-1),
// normalized rescales the swing counts to sum 1.
PowerVector banzhaf(const SimpleGame& v, BanzhafVariant variant);

// Criticality counting with the size weight (s-1)!(n-s)!/n! attached to the
// winning coalition's size s; efficiency holds without normalization.
PowerVector shapley_shubik(const SimpleGame& v);

// Criticality counting with equal division among each winning coalition's
// critical members.
PowerVector johnston(const SimpleGame& v);

// Winning-coalition counting, raw, normalized.
PowerVector koenig_braeuninger(const SimpleGame& v);

// Winning-coalition counting with equal division; no established name in
// the literature, so the repository labels it as a variant.
PowerVector kb_equal_division(const SimpleGame& v);

// Shift-minimal-winning counting, raw resp. equal-division, normalized.
// Both reject non-complete games.
PowerVector shift_index(const SimpleGame& v);
PowerVector shift_deegan_packel(const SimpleGame& v);

// The unique imputation (x >= 0, sum 1) lexicographically minimizing the
// non-increasingly sorted excesses v(S) - x(S) over proper nonempty S,
// computed by the iterative LP scheme in exact arithmetic. Player counts
// above 12 are rejected (LP size cap).
PowerVector nucleolus(const SimpleGame& v);

inline constexpr int kNucleolusMaxPlayers = 12;

// Registry entry tying a CLI identifier to its computation.
struct IndexInfo {
  std::string id;
  std::string display_name;
  bool efficient = false;          // values sum to exactly 1 on every game
  bool requires_complete = false;  // rejects games with incomparable players
  std::function<PowerVector(const SimpleGame&)> compute;
};

// All implemented indices in fixed display order.
const std::vector<IndexInfo>& index_registry();

// Lookup by id; throws InvalidInputError naming the unknown id.
const IndexInfo& find_index(const std::string& id);

}  // namespace powerlab

#endif  // POWERLAB_INDICES_HPP
