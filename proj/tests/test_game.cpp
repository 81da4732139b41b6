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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "powerlab/enumeration.hpp"
#include "powerlab/errors.hpp"
#include "powerlab/game.hpp"

using namespace powerlab;

namespace {

SimpleGame make_weighted(const std::string& quota,
                         const std::vector<std::string>& weights) {
  WeightedRepresentation rep;
  rep.quota = parse_rational(quota);
  for (const std::string& w : weights) rep.weights.push_back(parse_rational(w));
  return from_weighted(rep);
}

// Four members, two from each family; a couple passes with one member of
// each family present.
SimpleGame family_game() {
  return from_minimal_winning(4, {
                                     Coalition::of({1, 3}),
                                     Coalition::of({1, 4}),
                                     Coalition::of({2, 3}),
                                     Coalition::of({2, 4}),
                                 });
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("from_table enforces the boundary conditions") {
  CHECK_THROWS_AS(SimpleGame::from_table(1, {true, true}), InvalidInputError);
  CHECK_THROWS_AS(SimpleGame::from_table(1, {false, false}), InvalidInputError);
  CHECK_THROWS_AS(SimpleGame::from_table(2, {false, true}), InvalidInputError);
  CHECK_NOTHROW(SimpleGame::from_table(1, {false, true}));
}

TEST_CASE("from_table rejects non-monotone tables") {
  // {1} wins but {1,2} loses.
  CHECK_THROWS_AS(SimpleGame::from_table(2, {false, true, false, false}),
                  InvalidInputError);
  CHECK_THROWS_AS(
      SimpleGame::from_table(3, {false, false, true, false, false, false,
                                 false, true}),
      InvalidInputError);
}

TEST_CASE("weighted construction matches direct weight sums") {
  const SimpleGame v = make_weighted("3", {"2", "1", "1"});
  CHECK(v.num_players() == 3);
  CHECK(v.wins(Coalition::of({1, 2})));
  CHECK(v.wins(Coalition::of({1, 3})));
  CHECK(!v.wins(Coalition::of({2, 3})));
  CHECK(!v.wins(Coalition::of({1})));
  CHECK(v.wins(Coalition::grand(3)));

  // Fractional data follows the same comparison.
  const SimpleGame w = make_weighted("1/2", {"1/3", "1/3", "1/3"});
  CHECK(!w.wins(Coalition::of({1})));
  CHECK(w.wins(Coalition::of({1, 2})));
}

TEST_CASE("weighted representation validation") {
  WeightedRepresentation rep;
  rep.quota = Rational(0);
  rep.weights = {Rational(1)};
  CHECK_THROWS_AS(rep.validate(), InvalidInputError);
  rep.quota = Rational(3);  // above the weight total
  CHECK_THROWS_AS(rep.validate(), InvalidInputError);
  rep.quota = Rational(1);
  rep.weights = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(rep.validate(), InvalidInputError);
  rep.weights = {Rational(1)};
  CHECK_NOTHROW(rep.validate());
}

TEST_CASE("player count caps") {
  WeightedRepresentation rep;
  rep.quota = Rational(1);
  rep.weights.assign(25, Rational(1));
  CHECK_THROWS_AS(from_weighted(rep), CapError);
  CHECK_THROWS_AS(SimpleGame::from_table(0, {}), CapError);
}

TEST_CASE("minimal winning and maximal losing agree with subset scans") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_corpus({GameClass::kSimple, n}, [&](const SimpleGame& v) {
      auto expected = oracle::minimal_winning_masks(v);
      std::sort(expected.begin(), expected.end(),
                [](std::uint32_t a, std::uint32_t b) {
                  return canonical_less(Coalition(a), Coalition(b));
                });
      const auto got = minimal_winning(v);
      REQUIRE(got.size() == expected.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].mask() == expected[k]);
      }
      // Duality: winning iff above a minimal winner, losing iff below a
      // maximal loser.
      const auto ml = maximal_losing(v);
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        const bool above_mwc =
            std::any_of(got.begin(), got.end(), [&](Coalition s) {
              return (m & s.mask()) == s.mask();
            });
        const bool below_ml =
            std::any_of(ml.begin(), ml.end(), [&](Coalition t) {
              return (m & ~t.mask()) == 0;
            });
        CHECK(v.wins_mask(m) == above_mwc);
        CHECK(v.wins_mask(m) == !below_ml);
      }
      return true;
    });
  }
}

TEST_CASE("from_minimal_winning round-trips and rejects non-antichains") {
  const std::vector<Coalition> mwc = {Coalition::of({1, 2}),
                                      Coalition::of({1, 3})};
  const SimpleGame v = from_minimal_winning(3, mwc);
  CHECK(minimal_winning(v) == mwc);
  CHECK(v == make_weighted("3", {"2", "1", "1"}));

  CHECK_THROWS_AS(
      from_minimal_winning(3, {Coalition::of({1}), Coalition::of({1, 2})}),
      InvalidInputError);
  CHECK_THROWS_AS(from_minimal_winning(3, {}), InvalidInputError);
  CHECK_THROWS_AS(from_minimal_winning(2, {Coalition::of({3})}),
                  InvalidInputError);

  for (int n = 1; n <= 4; ++n) {
    enumerate_corpus({GameClass::kSimple, n}, [&](const SimpleGame& g) {
      CHECK(from_minimal_winning(n, minimal_winning(g)) == g);
      return true;
    });
  }
}

TEST_CASE("monotonicity closure holds on every corpus game") {
  enumerate_corpus({GameClass::kSimple, 4}, [](const SimpleGame& v) {
    for (std::uint32_t m = 0; m < 16u; ++m) {
      for (std::uint32_t sub = m; sub != 0; sub = (sub - 1) & m) {
        CHECK(v.wins_mask(sub) <= v.wins_mask(m));
      }
      CHECK(v.wins_mask(0) <= v.wins_mask(m));
    }
    return true;
  });
}

TEST_CASE("null players and equivalence") {
  const SimpleGame dictator = make_weighted("1", {"1", "0", "0"});
  CHECK(!is_null_player(dictator, 1));
  CHECK(is_null_player(dictator, 2));
  CHECK(is_null_player(dictator, 3));
  CHECK(are_equivalent(dictator, 2, 3));
  CHECK(!are_equivalent(dictator, 1, 2));

  const SimpleGame fam = family_game();
  CHECK(are_equivalent(fam, 1, 2));
  CHECK(are_equivalent(fam, 3, 4));
  CHECK(!are_equivalent(fam, 1, 3));
}

TEST_CASE("desirability matrix of the family game") {
  const SimpleGame fam = family_game();
  const DesirabilityRelation rel = desirability(fam);
  CHECK(rel.at(1, 2) == PairRelation::kEquivalent);
  CHECK(rel.at(3, 4) == PairRelation::kEquivalent);
  CHECK(rel.at(1, 3) == PairRelation::kIncomparable);
  CHECK(rel.at(3, 1) == PairRelation::kIncomparable);
  CHECK(rel.at(1, 1) == PairRelation::kEquivalent);
  CHECK(!rel.total());
  CHECK(!is_complete(fam));
}

TEST_CASE("desirability agrees with the definition scan") {
  enumerate_corpus({GameClass::kSimple, 4}, [](const SimpleGame& v) {
    const DesirabilityRelation rel = desirability(v);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        CHECK(rel.at_least(i, j) == oracle::at_least_desirable(v, i, j));
      }
    }
    return true;
  });
}

TEST_CASE("weighted games are complete; the committee is one") {
  const SimpleGame committee = make_weighted("51", {"47", "36", "17"});
  CHECK(is_complete(committee));
  CHECK(are_equivalent(committee, 1, 2));
  CHECK(are_equivalent(committee, 2, 3));
  CHECK(is_complete(make_weighted("51", {"35", "20", "15", "15", "15"})));
  CHECK(is_complete(make_weighted("1", {"1"})));
}

TEST_CASE("weightedness feasibility") {
  CHECK(!is_weighted(family_game()).has_value());

  const SimpleGame v = make_weighted("3", {"2", "1", "1"});
  const auto rep = is_weighted(v);
  REQUIRE(rep.has_value());
  CHECK(from_weighted(*rep) == v);  // game-level round-trip

  // Every simple game on three players admits weights.
  enumerate_corpus({GameClass::kSimple, 3}, [](const SimpleGame& g) {
    const auto r = is_weighted(g);
    REQUIRE(r.has_value());
    CHECK(from_weighted(*r) == g);
    return true;
  });
}

TEST_CASE("relabeling rebuilds the table through the image map") {
  const SimpleGame dictator = make_weighted("1", {"1", "0"});
  const SimpleGame swapped = dictator.relabeled({2, 1});
  CHECK(swapped.wins(Coalition::of({2})));
  CHECK(!swapped.wins(Coalition::of({1})));

  const SimpleGame v = make_weighted("3", {"2", "1", "1"});
  const SimpleGame w = v.relabeled({2, 3, 1});  // image of i is perm[i-1]
  for (std::uint32_t m = 0; m < 8u; ++m) {
    std::uint32_t image = 0;
    for (int i = 1; i <= 3; ++i) {
      if (m & (1u << (i - 1))) {
        image |= 1u << (std::vector<int>{2, 3, 1}[i - 1] - 1);
      }
    }
    CHECK(w.wins_mask(m) == v.wins_mask(image));
  }

  CHECK_THROWS_AS(v.relabeled({1, 1, 2}), InvalidInputError);
  CHECK_THROWS_AS(v.relabeled({1, 2}), InvalidInputError);
}

TEST_CASE("shift-minimal winning coalitions") {
  // No strict pairs in the unanimity game: everything stays.
  const SimpleGame unanimity = from_minimal_winning(3, {Coalition::grand(3)});
  CHECK(shift_minimal_winning(unanimity) ==
        std::vector<Coalition>{Coalition::grand(3)});

  const SimpleGame v = make_weighted("3", {"2", "1", "1"});
  CHECK(shift_minimal_winning(v) ==
        std::vector<Coalition>{Coalition::of({1, 2}), Coalition::of({1, 3})});

  // {1,2} survives because shifting 2 to 3 keeps it losing.
  const SimpleGame big = make_weighted("51", {"35", "20", "15", "15", "15"});
  const auto shift = shift_minimal_winning(big);
  CHECK(shift.size() == 5);
  CHECK(std::find(shift.begin(), shift.end(), Coalition::of({1, 2})) !=
        shift.end());

  CHECK_THROWS_AS(shift_minimal_winning(family_game()), InvalidInputError);

  // Agreement with the definition-direct scan on every complete 4-player
  // game.
  enumerate_corpus({GameClass::kComplete, 4}, [](const SimpleGame& g) {
    const auto got = shift_minimal_winning(g);
    auto expected = oracle::shift_minimal_masks(g);
    std::sort(expected.begin(), expected.end(),
              [](std::uint32_t a, std::uint32_t b) {
                return canonical_less(Coalition(a), Coalition(b));
              });
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].mask() == expected[k]);
    }
    return true;
  });
}

TEST_CASE("critical players") {
  const SimpleGame v = make_weighted("3", {"2", "1", "1"});
  CHECK(critical_players(v, Coalition::grand(3)) == std::vector<int>{1});
  CHECK(critical_players(v, Coalition::of({1, 2})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(critical_players(v, Coalition::of({2, 3})),
                  InvalidInputError);

  const SimpleGame dictator = make_weighted("1", {"1"});
  CHECK(critical_players(dictator, Coalition::of({1})) ==
        std::vector<int>{1});

  const SimpleGame committee = make_weighted("51", {"47", "36", "17"});
  CHECK(critical_players(committee, Coalition::of({1, 2})) ==
        std::vector<int>{1, 2});
}

TEST_CASE("veto players") {
  CHECK(veto_players(from_minimal_winning(3, {Coalition::grand(3)})) ==
        Coalition::grand(3));
  CHECK(veto_players(make_weighted("3", {"2", "1", "1"})) ==
        Coalition::of({1}));
  CHECK(veto_players(make_weighted("2", {"1", "1", "1"})).is_empty());
}

}  // TEST_SUITE
