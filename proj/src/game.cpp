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

#include "powerlab/game.hpp"

#include <algorithm>
#include <cstdint>

#include "powerlab/errors.hpp"
#include "powerlab/simplex.hpp"

namespace powerlab {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > SimpleGame::kMaxPlayers) {
    throw CapError("player count " + std::to_string(n) + " outside 1.." +
                   std::to_string(SimpleGame::kMaxPlayers));
  }
}

}  // namespace

void WeightedRepresentation::validate() const {
  check_player_count(num_players());
  if (quota <= 0) {
    throw InvalidInputError("quota must be positive");
  }
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) {
      throw InvalidInputError("weights must be nonnegative");
    }
    total += w;
  }
  if (quota > total) {
    throw InvalidInputError("quota exceeds the total weight");
  }
}

DesirabilityRelation::DesirabilityRelation(int n, std::vector<PairRelation> cells)
    : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInputError("desirability matrix has wrong size");
  }
}

bool DesirabilityRelation::total() const {
  return std::none_of(cells_.begin(), cells_.end(), [](PairRelation r) {
    return r == PairRelation::kIncomparable;
  });
}

SimpleGame SimpleGame::from_table(int n, std::vector<bool> winning) {
  check_player_count(n);
  const std::size_t size = std::size_t{1} << n;
  if (winning.size() != size) {
    throw InvalidInputError("winning table has " +
                            std::to_string(winning.size()) +
                            " entries, expected 2^n = " + std::to_string(size));
  }
  if (winning[0]) {
    throw InvalidInputError("the empty coalition must lose");
  }
  if (!winning[size - 1]) {
    throw InvalidInputError("the grand coalition must win");
  }
  for (std::uint32_t m = 1; m < size; ++m) {
    if (winning[m]) continue;
    // A losing coalition with a winning subset breaks monotonicity; it is
    // enough to look one member down.
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      std::uint32_t sub = m & ~(rest & -rest);
      if (winning[sub]) {
        throw InvalidInputError("not monotone: " + Coalition(sub).to_string() +
                                " wins but superset " +
                                Coalition(m).to_string() + " loses");
      }
    }
  }
  return SimpleGame(n, std::move(winning));
}

SimpleGame SimpleGame::from_table_unchecked(int n, std::vector<bool> winning) {
  return SimpleGame(n, std::move(winning));
}

SimpleGame SimpleGame::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw InvalidInputError("permutation length does not match player count");
  }
  std::uint32_t seen = 0;
  for (int image : perm) {
    if (image < 1 || image > n_) {
      throw InvalidInputError("permutation image outside 1..n");
    }
    seen |= std::uint32_t{1} << (image - 1);
  }
  if (seen != Coalition::grand(n_).mask()) {
    throw InvalidInputError("permutation is not a bijection");
  }
  const std::size_t size = winning_.size();
  std::vector<bool> relabeled_table(size);
  for (std::uint32_t m = 0; m < size; ++m) {
    std::uint32_t image = 0;
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      int player = std::countr_zero(rest) + 1;
      image |= std::uint32_t{1} << (perm[player - 1] - 1);
    }
    relabeled_table[m] = winning_[image];
  }
  return SimpleGame(n_, std::move(relabeled_table));
}

SimpleGame from_weighted(const WeightedRepresentation& rep) {
  rep.validate();
  const int n = rep.num_players();

  // Scale quota and weights to integers so the subset sums stay cheap.
  BigInt scale = 1;
  for (const Rational& w : rep.weights) {
    BigInt d = denominator(w);
    scale = scale / gcd(scale, d) * d;
  }
  {
    BigInt d = denominator(rep.quota);
    scale = scale / gcd(scale, d) * d;
  }
  std::vector<BigInt> weight(n);
  for (int i = 0; i < n; ++i) {
    weight[i] = numerator(Rational(rep.weights[i] * scale));
  }
  const BigInt quota = numerator(Rational(rep.quota * scale));

  // Walk the masks in Gray-code order so each step adjusts the running sum
  // by a single weight.
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> winning(size);
  BigInt sum = 0;
  std::uint32_t prev = 0;
  winning[0] = sum >= quota;
  for (std::size_t k = 1; k < size; ++k) {
    std::uint32_t code = static_cast<std::uint32_t>(k ^ (k >> 1));
    std::uint32_t flipped = code ^ prev;
    int bit = std::countr_zero(flipped);
    if (code & flipped) {
      sum += weight[bit];
    } else {
      sum -= weight[bit];
    }
    winning[code] = sum >= quota;
    prev = code;
  }
  return SimpleGame::from_table_unchecked(n, std::move(winning));
}

SimpleGame from_minimal_winning(int n, const std::vector<Coalition>& mwc) {
  check_player_count(n);
  if (mwc.empty()) {
    throw InvalidInputError("at least one minimal winning coalition required");
  }
  const std::uint32_t full = Coalition::grand(n).mask();
  for (Coalition s : mwc) {
    if (s.is_empty()) {
      throw InvalidInputError("the empty coalition cannot be minimal winning");
    }
    if ((s.mask() & ~full) != 0) {
      throw InvalidInputError("coalition " + s.to_string() +
                              " has members beyond player " + std::to_string(n));
    }
  }

  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> winning(size, false);
  for (Coalition s : mwc) winning[s.mask()] = true;
  // Monotone closure: a coalition wins once any one-member-smaller subset
  // does.
  for (std::uint32_t m = 1; m < size; ++m) {
    if (winning[m]) continue;
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      if (winning[m & ~(rest & -rest)]) {
        winning[m] = true;
        break;
      }
    }
  }
  SimpleGame game = SimpleGame::from_table_unchecked(n, std::move(winning));

  std::vector<Coalition> derived = minimal_winning(game);
  std::vector<Coalition> given = mwc;
  std::sort(given.begin(), given.end(), canonical_less);
  if (given != derived) {
    throw InvalidInputError(
        "the listed coalitions are not the minimal winning family of the "
        "game they induce (duplicate or non-minimal entries)");
  }
  return game;
}

std::vector<Coalition> minimal_winning(const SimpleGame& v) {
  std::vector<Coalition> out;
  const std::size_t size = v.num_coalitions();
  for (std::uint32_t m = 1; m < size; ++m) {
    if (!v.wins_mask(m)) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      if (v.wins_mask(m & ~(rest & -rest))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Coalition(m));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Coalition> maximal_losing(const SimpleGame& v) {
  const int n = v.num_players();
  const std::uint32_t full = Coalition::grand(n).mask();
  std::vector<Coalition> out;
  for (std::uint32_t m = 0; m < full; ++m) {
    if (v.wins_mask(m)) continue;
    bool maximal = true;
    for (std::uint32_t rest = full & ~m; rest != 0; rest &= rest - 1) {
      if (!v.wins_mask(m | (rest & -rest))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(Coalition(m));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_null_player(const SimpleGame& v, int player) {
  const std::size_t size = v.num_coalitions();
  const std::uint32_t bit = std::uint32_t{1} << (player - 1);
  for (std::uint32_t m = 0; m < size; ++m) {
    if (m & bit) continue;
    if (v.wins_mask(m) != v.wins_mask(m | bit)) return false;
  }
  return true;
}

bool are_equivalent(const SimpleGame& v, int i, int j) {
  const std::size_t size = v.num_coalitions();
  const std::uint32_t bi = std::uint32_t{1} << (i - 1);
  const std::uint32_t bj = std::uint32_t{1} << (j - 1);
  for (std::uint32_t m = 0; m < size; ++m) {
    if (m & (bi | bj)) continue;
    if (v.wins_mask(m | bi) != v.wins_mask(m | bj)) return false;
  }
  return true;
}

namespace {

// i is at least as desirable as j: every coalition that wins with j keeps
// winning after swapping j for i.
bool at_least_as_desirable(const SimpleGame& v, int i, int j) {
  const std::size_t size = v.num_coalitions();
  const std::uint32_t bi = std::uint32_t{1} << (i - 1);
  const std::uint32_t bj = std::uint32_t{1} << (j - 1);
  for (std::uint32_t m = 0; m < size; ++m) {
    if (m & (bi | bj)) continue;
    if (v.wins_mask(m | bj) && !v.wins_mask(m | bi)) return false;
  }
  return true;
}

}  // namespace

DesirabilityRelation desirability(const SimpleGame& v) {
  const int n = v.num_players();
  std::vector<PairRelation> cells(static_cast<std::size_t>(n) * n,
                                  PairRelation::kEquivalent);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool ij = at_least_as_desirable(v, i, j);
      bool ji = at_least_as_desirable(v, j, i);
      PairRelation upper;
      PairRelation lower;
      if (ij && ji) {
        upper = lower = PairRelation::kEquivalent;
      } else if (ij) {
        upper = PairRelation::kStrictlyAbove;
        lower = PairRelation::kStrictlyBelow;
      } else if (ji) {
        upper = PairRelation::kStrictlyBelow;
        lower = PairRelation::kStrictlyAbove;
      } else {
        upper = lower = PairRelation::kIncomparable;
      }
      cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = upper;
      cells[static_cast<std::size_t>(j - 1) * n + (i - 1)] = lower;
    }
  }
  return DesirabilityRelation(n, std::move(cells));
}

bool is_complete(const SimpleGame& v) { return desirability(v).total(); }

std::optional<WeightedRepresentation> is_weighted(const SimpleGame& v) {
  const int n = v.num_players();
  // Variables: w_1..w_n, then q. Feasibility of
  //   w(S) >= q        for minimal winning S,
  //   w(T) <= q - 1    for maximal losing T,
  //   q >= 1, w >= 0.
  // Minimal/maximal families suffice: with nonnegative weights every
  // superset of a winning coalition clears the quota and every subset of a
  // losing one stays below it. Fixing the separation gap to 1 loses no
  // generality since winning is invariant under scaling.
  std::vector<lp::Row> rows;
  for (Coalition s : minimal_winning(v)) {
    lp::Row row;
    row.coeffs.assign(n + 1, Rational(0));
    for (int i : s.players()) row.coeffs[i - 1] = 1;
    row.coeffs[n] = -1;
    row.rel = lp::Rel::kGreaterEq;
    row.rhs = 0;
    rows.push_back(std::move(row));
  }
  for (Coalition t : maximal_losing(v)) {
    lp::Row row;
    row.coeffs.assign(n + 1, Rational(0));
    for (int i : t.players()) row.coeffs[i - 1] = 1;
    row.coeffs[n] = -1;
    row.rel = lp::Rel::kLessEq;
    row.rhs = -1;
    rows.push_back(std::move(row));
  }
  {
    lp::Row row;
    row.coeffs.assign(n + 1, Rational(0));
    row.coeffs[n] = 1;
    row.rel = lp::Rel::kGreaterEq;
    row.rhs = 1;
    rows.push_back(std::move(row));
  }
  std::vector<Rational> objective(n + 1, Rational(0));
  lp::Result result = lp::minimize(objective, rows, n + 1);
  if (result.status != lp::Status::kOptimal) return std::nullopt;
  WeightedRepresentation rep;
  rep.quota = result.point[n];
  rep.weights.assign(result.point.begin(), result.point.begin() + n);
  return rep;
}

std::vector<Coalition> shift_minimal_winning(const SimpleGame& v) {
  if (!is_complete(v)) {
    throw InvalidInputError(
        "shift-minimal winning coalitions require a complete game");
  }
  DesirabilityRelation rel = desirability(v);
  const int n = v.num_players();
  std::vector<Coalition> out;
  for (Coalition s : minimal_winning(v)) {
    bool shift_minimal = true;
    for (int i : s.players()) {
      for (int j = 1; j <= n && shift_minimal; ++j) {
        if (s.contains(j) || !rel.strictly_above(i, j)) continue;
        if (v.wins(s.without(i).with(j))) shift_minimal = false;
      }
      if (!shift_minimal) break;
    }
    if (shift_minimal) out.push_back(s);
  }
  return out;
}

std::vector<int> critical_players(const SimpleGame& v, Coalition u) {
  if (!v.wins(u)) {
    throw InvalidInputError("coalition " + u.to_string() +
                            " loses; criticality is defined for winning "
                            "coalitions");
  }
  std::vector<int> out;
  for (int i : u.players()) {
    if (!v.wins(u.without(i))) out.push_back(i);
  }
  return out;
}

Coalition veto_players(const SimpleGame& v) {
  std::uint32_t mask = Coalition::grand(v.num_players()).mask();
  for (Coalition s : minimal_winning(v)) mask &= s.mask();
  return Coalition(mask);
}

}  // namespace powerlab
