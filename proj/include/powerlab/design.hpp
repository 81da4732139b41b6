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

#ifndef POWERLAB_DESIGN_HPP
#define POWERLAB_DESIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerlab/coalition.hpp"
#include "powerlab/enumeration.hpp"
#include "powerlab/game.hpp"
#include "powerlab/indices.hpp"

namespace powerlab {

// (1-lambda) * base_a + lambda * base_b, componentwise. Both bases must be
// efficient so the combination stays efficient.
struct ConvexCombinationSpec {
  std::string base_a;
  std::string base_b;
  Rational lambda;  // weight on base_b, in [0,1]

  void validate() const;
};

PowerVector combined_index(const SimpleGame& v,
                           const ConvexCombinationSpec& spec);

struct LmLambdaWitness {
  SimpleGame game;
  std::string game_id;
  int i = 0;  // i at least as desirable as j, yet base_a ranks i below j
  int j = 0;
  Rational bound;  // this pair's lower bound on lambda
};

// Result of minimizing the combination weight under local monotonicity.
struct LmLambdaReport {
  bool feasible = true;
  Rational lambda_star;                   // defined when feasible
  std::vector<LmLambdaWitness> witnesses;  // the binding pairs when > 0
};

// The least lambda such that the combination is locally monotonic on every
/// corpus game: the maximum over comparable pairs i >= j with A_i < A_j of
//   (A_j - A_i) / ((A_j - A_i) + (B_i - B_j)),
// infeasible when some such pair has B_i - B_j < 0 (then no weight on B
// repairs it). Pairs with B_i - B_j = 0 push the bound to exactly 1.
LmLambdaReport minimal_lm_lambda(const CorpusSpec& corpus,
                                 const std::string& base_a,
                                 const std::string& base_b);

// Same search over an explicit game list (ordinals index into the list).
LmLambdaReport minimal_lm_lambda(const std::vector<SimpleGame>& games,
                                 const std::string& base_a,
                                 const std::string& base_b);

struct SpectrumEntry {
  Rational value;
  std::uint64_t count = 0;  // corpus games attaining this maximum
};

// Distribution of the per-game largest power value m(v) = max_i g_i(v)
// over a corpus. "Largest player" means largest value, not largest weight,
// so the report does not depend on any particular representation.
struct SpectrumReport {
  std::string index_id;
  CorpusSpec corpus;
  std::vector<SpectrumEntry> attained;  // ascending, distinct values
  std::optional<Rational> max_below_one;
  std::vector<SpectrumEntry> open_interval;  // values strictly in (1/2, 1)
};

SpectrumReport largest_player_spectrum(const std::string& index_id,
                                       const CorpusSpec& corpus);

// Approximate a game by one on a kept subset I of its players: brute-force
// over all simple games on I, minimizing
//   sum_{i in I} |g_i(v) - g_i(v~)| + sum_{j outside I} |g_j(v)|.
struct AlonEdelmanQuery {
  SimpleGame game;
  std::string index_id;
  Coalition kept;  // nonempty, at most 4 players (search-space cap)
};

struct AlonEdelmanReport {
  SimpleGame best_game;  // on the kept players, relabeled 1..|I| ascending
  Rational distance;     // minimal attained L1 distance
  Rational epsilon;      // total value of the dropped players
  std::optional<Rational> ratio;  // distance / epsilon when epsilon > 0
  std::string note;  // "exact" (0/0), "undefined-ratio" (d>0, eps=0), or ""
};

AlonEdelmanReport alon_edelman_search(const AlonEdelmanQuery& query);

}  // namespace powerlab

#endif  // POWERLAB_DESIGN_HPP
