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

#include "powerlab/design.hpp"

#include <algorithm>
#include <map>

#include "powerlab/errors.hpp"
#include "powerlab/game_io.hpp"
#include "powerlab/parallel.hpp"

namespace powerlab {

namespace {

const IndexInfo& efficient_base(const std::string& id) {
  const IndexInfo& info = find_index(id);
  if (!info.efficient) {
    throw InvalidInputError("index \"" + id +
                            "\" is not efficient; convex combinations "
                            "require efficient bases");
  }
  return info;
}

std::optional<PowerVector> try_compute(const IndexInfo& index,
                                       const SimpleGame& v) {
  if (index.requires_complete && !is_complete(v)) return std::nullopt;
  return index.compute(v);
}

}  // namespace

void ConvexCombinationSpec::validate() const {
  efficient_base(base_a);
  efficient_base(base_b);
  if (lambda < 0 || lambda > 1) {
    throw InvalidInputError("lambda must lie in [0,1], got " +
                            rational_to_string(lambda));
  }
}

PowerVector combined_index(const SimpleGame& v,
                           const ConvexCombinationSpec& spec) {
  spec.validate();
  const PowerVector a = find_index(spec.base_a).compute(v);
  const PowerVector b = find_index(spec.base_b).compute(v);
  PowerVector result;
  result.values.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    result.values.push_back((1 - spec.lambda) * a.values[k] +
                            spec.lambda * b.values[k]);
  }
  return result;
}

namespace {

struct GameBounds {
  bool infeasible = false;
  // Lower bounds on lambda contributed by this game's comparable pairs
  // with the offending pair attached.
  std::vector<std::pair<Rational, std::pair<int, int>>> bounds;
};

GameBounds lambda_bounds(const IndexInfo& index_a, const IndexInfo& index_b,
                         const SimpleGame& v) {
  GameBounds out;
  const auto a = try_compute(index_a, v);
  const auto b = try_compute(index_b, v);
  if (!a || !b) return out;
  const DesirabilityRelation rel = desirability(v);
  const int n = v.num_players();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || !rel.at_least(i, j)) continue;
      const Rational gap_a = a->values[i - 1] - a->values[j - 1];
      if (gap_a >= 0) continue;
      const Rational gap_b = b->values[i - 1] - b->values[j - 1];
      if (gap_b < 0) {
        out.infeasible = true;
        out.bounds.push_back({Rational(1), {i, j}});
        return out;
      }
      // (1-lambda) gap_a + lambda gap_b >= 0, with gap_a < 0 <= gap_b;
      // gap_b = 0 forces lambda all the way to 1.
      const Rational bound = -gap_a / (gap_b - gap_a);
      out.bounds.push_back({bound, {i, j}});
    }
  }
  return out;
}

}  // namespace

LmLambdaReport minimal_lm_lambda(const std::vector<SimpleGame>& games,
                                 const std::string& base_a,
                                 const std::string& base_b) {
  if (games.empty()) {
    throw InvalidInputError("lambda minimization needs a nonempty corpus");
  }
  const IndexInfo& index_a = efficient_base(base_a);
  const IndexInfo& index_b = efficient_base(base_b);

  std::vector<GameBounds> per_game(games.size());
  parallel_for(games.size(), [&](std::size_t g) {
    per_game[g] = lambda_bounds(index_a, index_b, games[g]);
  });

  LmLambdaReport report;
  report.lambda_star = 0;
  for (std::size_t g = 0; g < games.size(); ++g) {
    if (per_game[g].infeasible) {
      report.feasible = false;
      report.lambda_star = 0;
      report.witnesses.clear();
      const auto& [bound, pair] = per_game[g].bounds.front();
      report.witnesses.push_back({games[g], corpus_game_id(g, games[g]),
                                  pair.first, pair.second, bound});
      return report;
    }
    for (const auto& [bound, pair] : per_game[g].bounds) {
      if (bound > report.lambda_star) {
        report.lambda_star = bound;
        report.witnesses.clear();
      }
      if (bound == report.lambda_star) {
        report.witnesses.push_back({games[g], corpus_game_id(g, games[g]),
                                    pair.first, pair.second, bound});
      }
    }
  }
  if (report.lambda_star == 0) report.witnesses.clear();
  return report;
}

LmLambdaReport minimal_lm_lambda(const CorpusSpec& corpus,
                                 const std::string& base_a,
                                 const std::string& base_b) {
  return minimal_lm_lambda(materialize_corpus(corpus), base_a, base_b);
}

SpectrumReport largest_player_spectrum(const std::string& index_id,
                                       const CorpusSpec& corpus) {
  corpus.validate();
  if (corpus.game_class == GameClass::kSimple) {
    throw InvalidInputError(
        "the spectrum is defined over the weighted or complete class");
  }
  if (corpus.n > 5) {
    throw CapError("spectrum enumeration is capped at 5 players");
  }
  const IndexInfo& index = find_index(index_id);

  const std::vector<SimpleGame> games = materialize_corpus(corpus);
  std::vector<std::optional<Rational>> maxima(games.size());
  parallel_for(games.size(), [&](std::size_t g) {
    const auto values = try_compute(index, games[g]);
    if (!values) return;
    maxima[g] = *std::max_element(values->values.begin(),
                                  values->values.end());
  });

  std::map<Rational, std::uint64_t> attained;
  for (const auto& m : maxima) {
    if (m) ++attained[*m];
  }

  SpectrumReport report;
  report.index_id = index_id;
  report.corpus = corpus;
  const Rational half(1, 2);
  for (const auto& [value, count] : attained) {
    report.attained.push_back({value, count});
    if (value < 1 &&
        (!report.max_below_one || value > *report.max_below_one)) {
      report.max_below_one = value;
    }
    if (value > half && value < 1) {
      report.open_interval.push_back({value, count});
    }
  }
  return report;
}

AlonEdelmanReport alon_edelman_search(const AlonEdelmanQuery& query) {
  const int n = query.game.num_players();
  if (query.kept.is_empty()) {
    throw InvalidInputError("the kept player set must be nonempty");
  }
  if (!query.kept.subset_of(Coalition::grand(n))) {
    throw InvalidInputError(
        "the kept player set must be a subset of the game's players");
  }
  const int k = query.kept.size();
  if (k > 4) {
    throw CapError("player-dropping search is capped at 4 kept players");
  }
  const IndexInfo& index = find_index(query.index_id);
  const auto full_values = try_compute(index, query.game);
  if (!full_values) {
    throw InvalidInputError("index \"" + query.index_id +
                            "\" requires a complete game");
  }

  const std::vector<int> kept_players = query.kept.players();
  Rational epsilon = 0;
  Rational dropped_mass = 0;  // sum of |values| outside the kept set
  for (int i = 1; i <= n; ++i) {
    if (query.kept.contains(i)) continue;
    epsilon += full_values->values[i - 1];
    dropped_mass += abs(full_values->values[i - 1]);
  }

  CorpusSpec candidates;
  candidates.game_class = GameClass::kSimple;
  candidates.n = k;
  std::optional<AlonEdelmanReport> best;
  enumerate_corpus(candidates, [&](const SimpleGame& candidate) {
    const auto candidate_values = try_compute(index, candidate);
    if (!candidate_values) return true;
    Rational distance = dropped_mass;
    for (int p = 0; p < k; ++p) {
      distance += abs(full_values->values[kept_players[p] - 1] -
                      candidate_values->values[p]);
    }
    if (!best || distance < best->distance) {
      best = AlonEdelmanReport{candidate, distance, epsilon, std::nullopt, ""};
    }
    return true;
  });
  if (!best) {
    throw InvalidInputError("no candidate game admits index \"" +
                            query.index_id + "\"");
  }

  if (epsilon > 0) {
    best->ratio = best->distance / epsilon;
  } else if (best->distance == 0) {
    best->note = "exact";
  } else {
    best->note = "undefined-ratio";
  }
  return *best;
}

}  // namespace powerlab
