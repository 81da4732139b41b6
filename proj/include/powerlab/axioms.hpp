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

#ifndef POWERLAB_AXIOMS_HPP
#define POWERLAB_AXIOMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "powerlab/enumeration.hpp"
#include "powerlab/game.hpp"
#include "powerlab/indices.hpp"

namespace powerlab {

enum class Axiom {
  kPositivity,
  kEfficiency,
  kNullPlayer,
  kSymmetry,
  kLocalMonotonicity,
  kLinearity,  // never checked: convex combinations leave the class
};

std::string axiom_id(Axiom axiom);

enum class Verdict { kHolds, kViolated, kNotApplicable };

std::string verdict_id(Verdict verdict);

// Local monotonicity can be read two ways: as a property of complete games
// only, or as a constraint on every comparable pair regardless of
// completeness. Reports carry both.
enum class LmScope { kCompleteGamesOnly, kComparablePairsAllGames };

// Outcome of one axiom check on one game. The witness names the offending
// player, pair, or permutation; it is empty when the check holds or does
// not apply (a game outside the index's domain).
struct GameCheck {
  Verdict verdict = Verdict::kHolds;
  std::string witness;
};

// All entries >= 0 and at least one nonzero.
GameCheck check_positivity(const IndexInfo& index, const SimpleGame& v);

// Entries sum to exactly 1.
GameCheck check_efficiency(const IndexInfo& index, const SimpleGame& v);

// Every null player receives exactly 0.
GameCheck check_null_player(const IndexInfo& index, const SimpleGame& v);

// Relabeling equivariance g_{tau(i)}(tau v) = g_i(v): all n! permutations
// for n <= 5, a fixed seeded sample of 100 beyond that.
GameCheck check_symmetry(const IndexInfo& index, const SimpleGame& v);

// Value ordering follows desirability on comparable pairs. Under the
// complete-games-only scope, non-complete games are not applicable.
GameCheck check_local_monotonicity(const IndexInfo& index, const SimpleGame& v,
                                   LmScope scope);

// One labeled verdict row of a per-game report (the `check` verb).
struct GameAxiomResult {
  Axiom axiom = Axiom::kPositivity;
  std::string label;  // axiom id, plus the scope for split LM rows
  Verdict verdict = Verdict::kHolds;
  std::string witness;
};

// Runs every checker on one game. Complete games get a single
// local-monotonicity row (the scopes coincide); others get one row per
// scope. Linearity is always reported not-applicable.
std::vector<GameAxiomResult> check_game(const IndexInfo& index,
                                        const SimpleGame& v);

// A corpus-level counterexample: the first offending game in canonical
// order, replayable in isolation.
struct Counterexample {
  std::uint64_t ordinal = 0;  // position in canonical corpus order
  SimpleGame game;
  std::string game_id;  // ordinal plus mwc-format game string
  std::string witness;
};

struct AxiomReport {
  std::string index_id;
  std::string column;  // matrix column this report backs
  Verdict verdict = Verdict::kHolds;
  std::vector<Counterexample> counterexamples;  // nonempty iff violated
};

// Rows = indices, columns = axioms (local monotonicity split by scope),
// cells aggregate per-game verdicts over the corpus by universal
// quantification; games outside an index's domain are skipped.
struct PropertyMatrix {
  CorpusSpec corpus;
  std::vector<std::string> index_ids;
  std::vector<std::string> columns;
  std::vector<AxiomReport> reports;  // row-major, index_ids x columns

  const AxiomReport& at(std::size_t row, std::size_t col) const {
    return reports[row * columns.size() + col];
  }
};

PropertyMatrix property_matrix(const CorpusSpec& corpus,
                               const std::vector<std::string>& index_ids);

// CSV export: header row of columns, one row per index, cells in
// {holds, violated(game-id), n/a}. Fields containing separators are quoted.
std::string matrix_to_csv(const PropertyMatrix& matrix);

}  // namespace powerlab

#endif  // POWERLAB_AXIOMS_HPP
