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

#ifndef POWERLAB_GAME_HPP
#define POWERLAB_GAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerlab/coalition.hpp"
#include "powerlab/rational.hpp"

namespace powerlab {

// A quota plus nonnegative weights, [q; w_1,...,w_n]. A coalition wins
// exactly when its weight sum reaches the quota.
struct WeightedRepresentation {
  Rational quota;
  std::vector<Rational> weights;

  int num_players() const { return static_cast<int>(weights.size()); }

  // Enforces quota > 0, weights >= 0, and quota <= total weight (otherwise
  // the grand coalition would lose). Throws InvalidInputError.
  void validate() const;
};

enum class PairRelation {
  kStrictlyAbove,  // i is strictly more desirable than j
  kStrictlyBelow,
  kEquivalent,
  kIncomparable,
};

// Pairwise desirability comparisons between players, derived from a game by
// exhaustive subset scan.
class DesirabilityRelation {
 public:
  DesirabilityRelation(int n, std::vector<PairRelation> cells);

  int num_players() const { return n_; }
  PairRelation at(int i, int j) const { return cells_[idx(i, j)]; }
  // i is at least as desirable as j.
  bool at_least(int i, int j) const {
    PairRelation r = at(i, j);
    return r == PairRelation::kStrictlyAbove || r == PairRelation::kEquivalent;
  }
  bool strictly_above(int i, int j) const {
    return at(i, j) == PairRelation::kStrictlyAbove;
  }
  bool comparable(int i, int j) const {
    return at(i, j) != PairRelation::kIncomparable;
  }
  // True when every pair of players is comparable.
  bool total() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  int n_;
  std::vector<PairRelation> cells_;
};

// A monotone yes/no voting game on n players, stored as its full winning
// table over all 2^n coalitions. Immutable after validated construction.
class SimpleGame {
 public:
  static constexpr int kMaxPlayers = Coalition::kMaxPlayers;

  // Validates v({}) = 0, v(N) = 1, and monotonicity; throws
  // InvalidInputError on violation, CapError for n outside 1..24.
  static SimpleGame from_table(int n, std::vector<bool> winning);

  // Construction paths that guarantee the invariants structurally may skip
  // the O(2^n * n) validation scan.
  static SimpleGame from_table_unchecked(int n, std::vector<bool> winning);

  int num_players() const { return n_; }
  std::size_t num_coalitions() const { return winning_.size(); }
  bool wins(Coalition s) const { return winning_[s.mask()]; }
  bool wins_mask(std::uint32_t mask) const { return winning_[mask]; }
  const std::vector<bool>& table() const { return winning_; }

  // The game tau v with tau v(S) = v(tau(S)). perm[i-1] is tau(i), a
  // bijection on {1..n}.
  SimpleGame relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const SimpleGame& a, const SimpleGame& b) = default;

 private:
  SimpleGame(int n, std::vector<bool> winning)
      : n_(n), winning_(std::move(winning)) {}

  int n_ = 0;
  std::vector<bool> winning_;
};

// Builds the game induced by a weighted representation: S wins iff
// w(S) >= q, compared in exact rational arithmetic.
SimpleGame from_weighted(const WeightedRepresentation& rep);

// Builds the game whose winning coalitions are exactly the supersets of the
// listed coalitions. The list must re-derive as the game's own minimal
// winning family (i.e. it must be a nonempty antichain); otherwise throws
// InvalidInputError.
SimpleGame from_minimal_winning(int n, const std::vector<Coalition>& mwc);

// Winning coalitions all of whose proper subsets lose, in canonical order.
std::vector<Coalition> minimal_winning(const SimpleGame& v);

// Losing coalitions all of whose proper supersets win, in canonical order.
std::vector<Coalition> maximal_losing(const SimpleGame& v);

// True when v(S) = v(S + i) for every coalition S.
bool is_null_player(const SimpleGame& v, int player);

// True when v(S + i) = v(S + j) for every S avoiding both players.
bool are_equivalent(const SimpleGame& v, int i, int j);

// Full pairwise desirability matrix by exhaustive scan.
DesirabilityRelation desirability(const SimpleGame& v);

// True when the desirability relation is total.
bool is_complete(const SimpleGame& v);

// Exact linear-feasibility test for weightedness. Returns a witness
// representation when one exists. The solved system normalizes the winning
// gap to 1 (losing weight <= q - 1, q >= 1), which is valid because winning
// is invariant under scaling.
std::optional<WeightedRepresentation> is_weighted(const SimpleGame& v);

// Minimal winning coalitions that stay losing under every one-step
// replacement of a member i by an outsider j with i strictly more desirable
// than j. Requires a complete game.
//
// The underlying notion of "tightening" is adopted from the standard
// literature definition (one-step shifts); see README for the exact rule.
std::vector<Coalition> shift_minimal_winning(const SimpleGame& v);

// Members i of winning U with U - i losing, ascending. Throws
// InvalidInputError when U loses.
std::vector<int> critical_players(const SimpleGame& v, Coalition u);

// Intersection of all winning coalitions (the veto players; may be empty).
Coalition veto_players(const SimpleGame& v);

}  // namespace powerlab

#endif  // POWERLAB_GAME_HPP
