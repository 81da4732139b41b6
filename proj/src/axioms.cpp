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

#include "powerlab/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "powerlab/errors.hpp"
#include "powerlab/game_io.hpp"
#include "powerlab/parallel.hpp"

namespace powerlab {

namespace {

constexpr int kExhaustiveSymmetryLimit = 5;
constexpr int kSymmetrySampleSize = 100;
constexpr std::uint32_t kSymmetrySampleSeed = 0x9d2c5680u;

// A game outside the index's domain (an incomplete game under a
// completeness-requiring index) yields no value and no verdict.
std::optional<PowerVector> try_compute(const IndexInfo& index,
                                       const SimpleGame& v) {
  if (index.requires_complete && !is_complete(v)) return std::nullopt;
  return index.compute(v);
}

std::string pair_witness(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string permutation_witness(const std::vector<int>& perm) {
  std::ostringstream os;
  os << "permutation (";
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (k > 0) os << ' ';
    os << perm[k];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::kPositivity:
      return "positivity";
    case Axiom::kEfficiency:
      return "efficiency";
    case Axiom::kNullPlayer:
      return "null-player";
    case Axiom::kSymmetry:
      return "symmetry";
    case Axiom::kLocalMonotonicity:
      return "local-monotonicity";
    case Axiom::kLinearity:
      return "linearity";
  }
  return "positivity";
}

std::string verdict_id(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kNotApplicable:
      return "n/a";
  }
  return "holds";
}

GameCheck check_positivity(const IndexInfo& index, const SimpleGame& v) {
  const auto g = try_compute(index, v);
  if (!g) return {Verdict::kNotApplicable, ""};
  bool any_nonzero = false;
  for (int i = 1; i <= g->num_players(); ++i) {
    const Rational& value = g->values[i - 1];
    if (value < 0) {
      return {Verdict::kViolated, "player " + std::to_string(i) +
                                      " receives " + rational_to_string(value)};
    }
    if (value != 0) any_nonzero = true;
  }
  if (!any_nonzero) return {Verdict::kViolated, "all players receive 0"};
  return {Verdict::kHolds, ""};
}

GameCheck check_efficiency(const IndexInfo& index, const SimpleGame& v) {
  const auto g = try_compute(index, v);
  if (!g) return {Verdict::kNotApplicable, ""};
  const Rational total = g->sum();
  if (total != 1) {
    return {Verdict::kViolated, "sum " + rational_to_string(total)};
  }
  return {Verdict::kHolds, ""};
}

GameCheck check_null_player(const IndexInfo& index, const SimpleGame& v) {
  const auto g = try_compute(index, v);
  if (!g) return {Verdict::kNotApplicable, ""};
  for (int i = 1; i <= v.num_players(); ++i) {
    if (!is_null_player(v, i)) continue;
    if (g->values[i - 1] != 0) {
      return {Verdict::kViolated,
              "null player " + std::to_string(i) + " receives " +
                  rational_to_string(g->values[i - 1])};
    }
  }
  return {Verdict::kHolds, ""};
}

GameCheck check_symmetry(const IndexInfo& index, const SimpleGame& v) {
  const auto g = try_compute(index, v);
  if (!g) return {Verdict::kNotApplicable, ""};
  const int n = v.num_players();

  // Under the table convention (tau v)(S) = v(tau(S)), player i of the
  // relabeled game plays the role of tau(i) in the original, so the values
  // must satisfy g_i(tau v) = g_{tau(i)}(v).
  auto violates = [&](const std::vector<int>& perm) {
    const SimpleGame relabeled = v.relabeled(perm);
    const PowerVector relabeled_values = index.compute(relabeled);
    for (int i = 1; i <= n; ++i) {
      if (relabeled_values.values[i - 1] != g->values[perm[i - 1] - 1]) {
        return true;
      }
    }
    return false;
  };

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  if (n <= kExhaustiveSymmetryLimit) {
    do {
      if (violates(perm)) {
        return {Verdict::kViolated, permutation_witness(perm)};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::mt19937 rng(kSymmetrySampleSeed);
    for (int round = 0; round < kSymmetrySampleSize; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (violates(perm)) {
        return {Verdict::kViolated, permutation_witness(perm)};
      }
    }
  }
  return {Verdict::kHolds, ""};
}

GameCheck check_local_monotonicity(const IndexInfo& index, const SimpleGame& v,
                                   LmScope scope) {
  if (scope == LmScope::kCompleteGamesOnly && !is_complete(v)) {
    return {Verdict::kNotApplicable, ""};
  }
  const auto g = try_compute(index, v);
  if (!g) return {Verdict::kNotApplicable, ""};
  const DesirabilityRelation rel = desirability(v);
  const int n = v.num_players();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || !rel.at_least(i, j)) continue;
      if (g->values[i - 1] < g->values[j - 1]) {
        return {Verdict::kViolated, pair_witness(i, j)};
      }
    }
  }
  return {Verdict::kHolds, ""};
}

std::vector<GameAxiomResult> check_game(const IndexInfo& index,
                                        const SimpleGame& v) {
  std::vector<GameAxiomResult> results;
  auto push = [&results](Axiom axiom, const std::string& label, GameCheck c) {
    results.push_back({axiom, label, c.verdict, std::move(c.witness)});
  };
  push(Axiom::kPositivity, axiom_id(Axiom::kPositivity),
       check_positivity(index, v));
  push(Axiom::kEfficiency, axiom_id(Axiom::kEfficiency),
       check_efficiency(index, v));
  push(Axiom::kNullPlayer, axiom_id(Axiom::kNullPlayer),
       check_null_player(index, v));
  push(Axiom::kSymmetry, axiom_id(Axiom::kSymmetry),
       check_symmetry(index, v));
  if (is_complete(v)) {
    push(Axiom::kLocalMonotonicity, axiom_id(Axiom::kLocalMonotonicity),
         check_local_monotonicity(index, v, LmScope::kCompleteGamesOnly));
  } else {
    push(Axiom::kLocalMonotonicity,
         axiom_id(Axiom::kLocalMonotonicity) + " (complete games only)",
         check_local_monotonicity(index, v, LmScope::kCompleteGamesOnly));
    push(Axiom::kLocalMonotonicity,
         axiom_id(Axiom::kLocalMonotonicity) + " (comparable pairs)",
         check_local_monotonicity(index, v,
                                  LmScope::kComparablePairsAllGames));
  }
  push(Axiom::kLinearity, axiom_id(Axiom::kLinearity),
       {Verdict::kNotApplicable, ""});
  return results;
}

namespace {

const std::vector<std::string>& matrix_columns() {
  static const std::vector<std::string> columns = {
      "positivity",         "efficiency",
      "null-player",        "symmetry",
      "lm-complete-games",  "lm-comparable-pairs",
      "linearity",
  };
  return columns;
}

GameCheck run_column(const IndexInfo& index, const SimpleGame& v,
                     std::size_t column) {
  switch (column) {
    case 0:
      return check_positivity(index, v);
    case 1:
      return check_efficiency(index, v);
    case 2:
      return check_null_player(index, v);
    case 3:
      return check_symmetry(index, v);
    case 4:
      return check_local_monotonicity(index, v, LmScope::kCompleteGamesOnly);
    case 5:
      return check_local_monotonicity(index, v,
                                      LmScope::kComparablePairsAllGames);
    default:
      return {Verdict::kNotApplicable, ""};
  }
}

}  // namespace

PropertyMatrix property_matrix(const CorpusSpec& corpus,
                               const std::vector<std::string>& index_ids) {
  PropertyMatrix matrix;
  matrix.corpus = corpus;
  matrix.index_ids = index_ids;
  matrix.columns = matrix_columns();

  const std::vector<SimpleGame> games = materialize_corpus(corpus);
  const std::size_t num_columns = matrix.columns.size();

  for (const std::string& id : index_ids) {
    const IndexInfo& index = find_index(id);
    std::vector<std::vector<GameCheck>> per_game(games.size());
    parallel_for(games.size(), [&](std::size_t g) {
      per_game[g].resize(num_columns);
      for (std::size_t column = 0; column < num_columns; ++column) {
        per_game[g][column] = run_column(index, games[g], column);
      }
    });

    for (std::size_t column = 0; column < num_columns; ++column) {
      AxiomReport report;
      report.index_id = id;
      report.column = matrix.columns[column];
      bool any_applicable = false;
      for (std::size_t g = 0; g < games.size(); ++g) {
        const GameCheck& check = per_game[g][column];
        if (check.verdict == Verdict::kNotApplicable) continue;
        any_applicable = true;
        if (check.verdict == Verdict::kViolated &&
            report.counterexamples.empty()) {
          report.counterexamples.push_back(
              {g, games[g], corpus_game_id(g, games[g]), check.witness});
        }
      }
      if (!any_applicable) {
        report.verdict = Verdict::kNotApplicable;
      } else if (!report.counterexamples.empty()) {
        report.verdict = Verdict::kViolated;
      } else {
        report.verdict = Verdict::kHolds;
      }
      matrix.reports.push_back(std::move(report));
    }
  }
  return matrix;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string matrix_to_csv(const PropertyMatrix& matrix) {
  std::ostringstream os;
  os << "index";
  for (const std::string& column : matrix.columns) os << ',' << column;
  os << '\n';
  for (std::size_t row = 0; row < matrix.index_ids.size(); ++row) {
    os << csv_field(matrix.index_ids[row]);
    for (std::size_t column = 0; column < matrix.columns.size(); ++column) {
      const AxiomReport& report = matrix.at(row, column);
      std::string cell;
      switch (report.verdict) {
        case Verdict::kHolds:
          cell = "holds";
          break;
        case Verdict::kNotApplicable:
          cell = "n/a";
          break;
        case Verdict::kViolated:
          cell = "violated(" + report.counterexamples.front().game_id + ")";
          break;
      }
      os << ',' << csv_field(cell);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace powerlab
