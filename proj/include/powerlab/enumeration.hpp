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

#ifndef POWERLAB_ENUMERATION_HPP
#define POWERLAB_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "powerlab/game.hpp"

namespace powerlab {

enum class GameClass { kSimple, kComplete, kWeighted };

enum class Dedup { kNone, kUpToPermutation };

GameClass parse_game_class(const std::string& text);  // "simple" etc.
std::string game_class_id(GameClass game_class);

// A corpus: every game of a class at a fixed player count. Full
// enumeration caps n at 5 for simple/complete and 6 for weighted (the
// weighted n=6 run filters just under eight million candidates through the
// completeness test and solves one feasibility LP per survivor; expect
// minutes, not seconds).
struct CorpusSpec {
  GameClass game_class = GameClass::kSimple;
  int n = 1;
  Dedup dedup = Dedup::kNone;

  void validate() const;  // throws CapError beyond the documented caps
};

// Visits every game of the corpus exactly once, in canonical order:
// depth-first over minimal-winning families, extending along coalitions
// ordered by (size, mask). Under dedup, only each permutation class's
// canonical representative (lexicographically least winning table over all
// relabelings) is visited. Return false to stop early.
void enumerate_corpus(const CorpusSpec& spec,
                      const std::function<bool(const SimpleGame&)>& visit);

// Corpus cardinality without materializing games.
std::uint64_t count_corpus(const CorpusSpec& spec);

// The corpus as a vector, in canonical order.
std::vector<SimpleGame> materialize_corpus(const CorpusSpec& spec);

}  // namespace powerlab

#endif  // POWERLAB_ENUMERATION_HPP
