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
//
// End-to-end gate: ten independent checks over the whole library, each
// printing one PASS/FAIL line. Wall-clock limits are part of the contract
// and are pinned next to each check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "powerlab/axioms.hpp"
#include "powerlab/design.hpp"
#include "powerlab/enumeration.hpp"
#include "powerlab/game.hpp"
#include "powerlab/game_io.hpp"
#include "powerlab/indices.hpp"

using namespace powerlab;

namespace {

SimpleGame make_weighted(const std::string& quota,
                         const std::vector<std::string>& weights) {
  WeightedRepresentation rep;
  rep.quota = parse_rational(quota);
  for (const auto& w : weights) {
    rep.weights.push_back(parse_rational(w));
  }
  return from_weighted(rep);
}

SimpleGame family_game() {
  return from_minimal_winning(
      4, {Coalition::of({1, 3}), Coalition::of({1, 4}), Coalition::of({2, 3}),
          Coalition::of({2, 4})});
}

SimpleGame committee() { return make_weighted("51", {"47", "36", "17"}); }

SimpleGame assembly() {
  return make_weighted("51", {"35", "20", "15", "15", "15"});
}

// Accumulates failure details; a criterion passes iff none were recorded.
class Gate {
 public:
  void require(bool condition, const std::string& detail) {
    if (!condition) {
      details_.push_back(detail);
    }
  }
  bool passed() const { return details_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < details_.size(); ++k) {
      os << (k ? "; " : "") << details_[k];
    }
    return os.str();
  }

 private:
  std::vector<std::string> details_;
};

bool uniform_quarter_family(Gate& gate) {
  const SimpleGame v = family_game();
  const PowerVector g = pgi(v);
  for (int i = 0; i < 4; ++i) {
    gate.require(g.values[i] == Rational(1, 4),
                 "share of player " + std::to_string(i + 1) + " is " +
                     rational_to_string(g.values[i]));
  }
  gate.require(!is_weighted(v).has_value(),
               "a weighted representation was found");
  const DesirabilityRelation rel = desirability(v);
  gate.require(rel.at(1, 2) == PairRelation::kEquivalent,
               "players 1 and 2 are not equivalent");
  gate.require(rel.at(3, 4) == PairRelation::kEquivalent,
               "players 3 and 4 are not equivalent");
  gate.require(rel.at(1, 3) == PairRelation::kIncomparable,
               "players 1 and 3 compare");
  return gate.passed();
}

bool committee_equal_power(Gate& gate) {
  const SimpleGame v = committee();
  for (const auto& info : index_registry()) {
    const PowerVector g = info.compute(v);
    gate.require(g.values[0] == g.values[1] && g.values[1] == g.values[2],
                 info.id + " differentiates the seats");
    if (info.efficient) {
      gate.require(g.values[0] == Rational(1, 3),
                   info.id + " gives " + rational_to_string(g.values[0]));
    }
  }
  const PowerVector raw = banzhaf(v, BanzhafVariant::kRaw);
  gate.require(raw.values[0] == Rational(1, 2),
               "raw swing share is " + rational_to_string(raw.values[0]));
  return gate.passed();
}

bool corpus_counts(Gate& gate) {
  const std::uint64_t expected[] = {1, 4, 18, 166, 7579};
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t simple = count_corpus({GameClass::kSimple, n});
    const std::uint64_t complete = count_corpus({GameClass::kComplete, n});
    const std::uint64_t weighted = count_corpus({GameClass::kWeighted, n});
    gate.require(simple == expected[n - 1],
                 "simple n=" + std::to_string(n) + " counts " +
                     std::to_string(simple));
    gate.require(weighted <= complete,
                 "weighted exceeds complete at n=" + std::to_string(n));
    gate.require(complete <= simple,
                 "complete exceeds simple at n=" + std::to_string(n));
  }
  return gate.passed();
}

bool assembly_monotonicity_flag(Gate& gate) {
  const SimpleGame v = assembly();
  const std::vector<Rational> expected = {
      {4, 15}, {2, 15}, {3, 15}, {3, 15}, {3, 15}};
  gate.require(pgi(v).values == expected, "share vector is off");
  gate.require(desirability(v).at_least(2, 3),
               "seat 2 is not at least as desirable as seat 3");

  const GameCheck flagged = check_local_monotonicity(
      find_index("pgi"), v, LmScope::kCompleteGamesOnly);
  gate.require(flagged.verdict == Verdict::kViolated, "no violation flagged");
  gate.require(flagged.witness == "(2,3)",
               "witness is " + flagged.witness);

  for (const auto id : {"banzhaf", "shapley-shubik"}) {
    const IndexInfo& info = find_index(id);
    std::uint64_t violations = 0;
    for (int n = 1; n <= 5; ++n) {
      enumerate_corpus({GameClass::kWeighted, n}, [&](const SimpleGame& w) {
        if (check_local_monotonicity(info, w, LmScope::kCompleteGamesOnly)
                .verdict == Verdict::kViolated) {
          ++violations;
        }
        return true;
      });
    }
    gate.require(violations == 0,
                 std::string(id) + " shows " + std::to_string(violations) +
                     " violations");
  }
  return gate.passed();
}

bool indices_match_oracles(Gate& gate) {
  std::uint64_t mismatches = 0;
  enumerate_corpus({GameClass::kSimple, 4}, [&](const SimpleGame& v) {
    mismatches += pgi(v).values != oracle::pgi(v);
    mismatches += deegan_packel(v).values != oracle::deegan_packel(v);
    mismatches +=
        banzhaf(v, BanzhafVariant::kRaw).values != oracle::banzhaf_raw(v);
    mismatches += banzhaf(v, BanzhafVariant::kNormalized).values !=
                  oracle::banzhaf_normalized(v);
    mismatches +=
        shapley_shubik(v).values != oracle::shapley_shubik_permutation(v);
    mismatches += johnston(v).values != oracle::johnston(v);
    mismatches +=
        koenig_braeuninger(v).values != oracle::koenig_braeuninger(v);
    mismatches +=
        kb_equal_division(v).values != oracle::kb_equal_division(v);
    if (is_complete(v)) {
      mismatches += shift_index(v).values != oracle::shift_index(v);
      mismatches +=
          shift_deegan_packel(v).values != oracle::shift_deegan_packel(v);
    }
    return true;
  });
  gate.require(mismatches == 0,
               std::to_string(mismatches) + " oracle mismatches");
  return gate.passed();
}

bool property_matrix_expectations(Gate& gate) {
  std::vector<std::string> ids;
  for (const auto& info : index_registry()) {
    ids.push_back(info.id);
  }
  const std::vector<std::string> null_clean = {
      "pgi",      "deegan-packel", "banzhaf-raw",
      "banzhaf",  "shapley-shubik", "johnston",
      "shift",    "shift-deegan-packel", "nucleolus"};
  for (int n = 1; n <= 4; ++n) {
    const PropertyMatrix matrix =
        property_matrix({GameClass::kSimple, n}, ids);
    const auto cell = [&](const std::string& id,
                          const std::string& column) -> const AxiomReport& {
      std::size_t row = 0, col = 0;
      for (std::size_t k = 0; k < matrix.index_ids.size(); ++k) {
        if (matrix.index_ids[k] == id) row = k;
      }
      for (std::size_t k = 0; k < matrix.columns.size(); ++k) {
        if (matrix.columns[k] == column) col = k;
      }
      return matrix.at(row, col);
    };
    const std::string at_n = " at n=" + std::to_string(n);

    for (const auto& info : index_registry()) {
      if (info.efficient) {
        gate.require(
            cell(info.id, "efficiency").verdict == Verdict::kHolds,
            info.id + " efficiency" + at_n);
      }
      gate.require(cell(info.id, "symmetry").verdict == Verdict::kHolds,
                   info.id + " symmetry" + at_n);
    }
    for (const auto& id : null_clean) {
      gate.require(cell(id, "null-player").verdict == Verdict::kHolds,
                   id + " null-player" + at_n);
    }
    if (n >= 2) {
      const AxiomReport& kb = cell("koenig-braeuninger", "null-player");
      gate.require(kb.verdict == Verdict::kViolated,
                   "membership counting is not flagged" + at_n);
      gate.require(!kb.counterexamples.empty(),
                   "no counterexample recorded" + at_n);
      if (!kb.counterexamples.empty()) {
        const GameCheck replay = check_null_player(
            find_index("koenig-braeuninger"), kb.counterexamples.front().game);
        gate.require(replay.verdict == Verdict::kViolated &&
                         replay.witness == kb.counterexamples.front().witness,
                     "counterexample does not replay" + at_n);
      }
    }
  }
  return gate.passed();
}

bool nucleolus_checks(Gate& gate) {
  gate.require(nucleolus(make_weighted("1", {"1", "0", "0"})).values ==
                   std::vector<Rational>{Rational(1), Rational(0), Rational(0)},
               "dictator solution is off");
  gate.require(nucleolus(make_weighted("2", {"1", "1", "1"})).values ==
                   std::vector<Rational>{{1, 3}, {1, 3}, {1, 3}},
               "symmetric majority solution is off");
  gate.require(nucleolus(make_weighted("3", {"2", "1", "1"})).values ==
                   std::vector<Rational>{Rational(1), Rational(0), Rational(0)},
               "veto-seat solution is off");

  std::mt19937 rng(97531);
  std::uint64_t veto_breaks = 0;
  std::uint64_t lex_breaks = 0;
  for (int n = 1; n <= 4; ++n) {
    enumerate_corpus({GameClass::kSimple, n}, [&](const SimpleGame& v) {
      const PowerVector x = nucleolus(v);
      const Coalition veto = veto_players(v);
      if (!veto.is_empty()) {
        const Rational share(1, static_cast<int>(veto.size()));
        for (int i = 1; i <= n; ++i) {
          const Rational want = veto.contains(i) ? share : Rational(0);
          if (x.values[i - 1] != want) {
            ++veto_breaks;
          }
        }
      }
      const auto best = oracle::sorted_excesses(v, x.values);
      for (int k = 0; k < 1000; ++k) {
        const auto y = oracle::random_imputation(n, rng);
        if (oracle::lexicographically_less(oracle::sorted_excesses(v, y),
                                           best)) {
          ++lex_breaks;
        }
      }
      return true;
    });
  }
  gate.require(veto_breaks == 0,
               std::to_string(veto_breaks) + " veto-concentration breaks");
  gate.require(lex_breaks == 0,
               std::to_string(lex_breaks) + " sampled improvements");
  return gate.passed();
}

bool design_lambda(Gate& gate) {
  for (int n = 1; n <= 3; ++n) {
    const LmLambdaReport report = minimal_lm_lambda(
        CorpusSpec{GameClass::kComplete, n}, "pgi", "banzhaf");
    gate.require(report.feasible && report.lambda_star == Rational(0),
                 "corpus n=" + std::to_string(n) + " needs lambda " +
                     rational_to_string(report.lambda_star));
  }

  const SimpleGame v = assembly();
  const LmLambdaReport report =
      minimal_lm_lambda(std::vector<SimpleGame>{v}, "pgi", "banzhaf");
  gate.require(report.feasible, "reported infeasible");

  // The closed form from the worst pair (i,j): the mixing weight at which
  // (1-l)*A + l*B stops ranking i below j.
  const std::vector<Rational> a = oracle::pgi(v);
  const std::vector<Rational> b = oracle::banzhaf_normalized(v);
  const Rational gap_a = a[1] - a[2];  // seats 2 and 3
  const Rational gap_b = b[1] - b[2];
  const Rational closed_form = -gap_a / (gap_b - gap_a);
  gate.require(report.lambda_star == closed_form,
               "lambda " + rational_to_string(report.lambda_star) +
                   " differs from the closed form " +
                   rational_to_string(closed_form));
  gate.require(closed_form == Rational(5, 11), "closed form is off");

  IndexInfo mixed = find_index("pgi");
  mixed.id = "mixed";
  const Rational star = report.lambda_star;
  mixed.compute = [star](const SimpleGame& game) {
    return combined_index(game, {"pgi", "banzhaf", star});
  };
  gate.require(check_local_monotonicity(mixed, v,
                                        LmScope::kCompleteGamesOnly)
                       .verdict == Verdict::kHolds,
               "the combination still violates at lambda*");

  const Rational shy = star * Rational(999999, 1000000);
  IndexInfo under = mixed;
  under.compute = [shy](const SimpleGame& game) {
    return combined_index(game, {"pgi", "banzhaf", shy});
  };
  const GameCheck check =
      check_local_monotonicity(under, v, LmScope::kCompleteGamesOnly);
  gate.require(check.verdict == Verdict::kViolated &&
                   check.witness == "(2,3)",
               "no failure just below lambda*");
  return gate.passed();
}

bool spectrum_gap(Gate& gate) {
  for (int n = 1; n <= 5; ++n) {
    const SpectrumReport report =
        largest_player_spectrum("pgi", {GameClass::kWeighted, n});
    gate.require(report.open_interval.empty(),
                 "a maximum lies strictly between 1/2 and 1 at n=" +
                     std::to_string(n));
  }
  const SpectrumReport ssi =
      largest_player_spectrum("shapley-shubik", {GameClass::kWeighted, 3});
  bool found = false;
  for (const auto& entry : ssi.open_interval) {
    found = found || entry.value == Rational(2, 3);
  }
  gate.require(found, "2/3 is missing from the open interval");
  return gate.passed();
}

bool approximation_bounds(Gate& gate) {
  const struct {
    SimpleGame game;
    const char* index;
  } null_drops[] = {
      {make_weighted("1", {"1", "0", "0"}), "banzhaf"},
      {make_weighted("1", {"1", "0"}), "pgi"},
      {make_weighted("1", {"1", "0", "0", "0"}), "deegan-packel"},
  };
  for (const auto& probe : null_drops) {
    const AlonEdelmanReport report = alon_edelman_search(
        {probe.game, probe.index, Coalition::of({1})});
    gate.require(report.distance == Rational(0),
                 std::string(probe.index) + " null drop costs " +
                     rational_to_string(report.distance));
  }

  const AlonEdelmanReport report = alon_edelman_search(
      {make_weighted("3", {"2", "1", "1"}), "banzhaf", Coalition::of({1})});
  gate.require(report.ratio.has_value() && *report.ratio == Rational(2),
               "ratio is not 2");
  return gate.passed();
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    double limit_seconds;  // 0 = no limit
    std::function<bool(Gate&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "four-seat family game: uniform shares, unweighted, paired seats",
       1.0, uniform_quarter_family},
      {2, "three-seat committee: every index equalizes the seats", 1.0,
       committee_equal_power},
      {3, "corpus counts 1,4,18,166,7579 and class nesting", 120.0,
       corpus_counts},
      {4, "five-party assembly: share inversion flagged, clean indices stay "
          "clean",
       300.0, assembly_monotonicity_flag},
      {5, "all indices equal their definition-direct recomputation (n=4)", 0,
       indices_match_oracles},
      {6, "property matrix matches the expectation table (n<=4)", 0,
       property_matrix_expectations},
      {7, "nucleolus: named solutions, veto concentration, sampled "
          "optimality",
       600.0, nucleolus_checks},
      {8, "minimal mixing weight: zero on clean corpora, 5/11 on the "
          "assembly, tight",
       0, design_lambda},
      {9, "largest-share spectrum: gap for membership counts, 2/3 for the "
          "size-weighted index",
       0, spectrum_gap},
      {10, "approximation: free null drops, ratio exactly 2", 0,
       approximation_bounds},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = criterion.run(gate);
      detail = gate.summary();
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.limit_seconds > 0 &&
        seconds > criterion.limit_seconds) {
      ok = false;
      detail = "runtime limit exceeded";
    }
    std::printf("%s  criterion %2d  [%7.2fs]  %s%s%s\n",
                ok ? "PASS" : "FAIL", criterion.number, seconds,
                criterion.label, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
