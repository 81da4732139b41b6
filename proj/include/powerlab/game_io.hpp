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

#ifndef POWERLAB_GAME_IO_HPP
#define POWERLAB_GAME_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "powerlab/game.hpp"
#include "powerlab/indices.hpp"

namespace powerlab {

// Parses the single-object game format:
//   {"type":"weighted", "quota":"51", "weights":["47","36","17"]}
//   {"type":"mwc", "n":4, "minimal_winning":[[1,3],[1,4],[2,3],[2,4]]}
// Rationals are strings ("p/q" or integer), players 1-indexed. Parsing is
// strict: unknown keys, wrong value types, and inconsistent coalition lists
// are all rejected with InvalidInputError naming the offending field.
SimpleGame parse_game(const std::string& text);

// parse_game applied to a file's contents.
SimpleGame load_game(const std::string& path);

// The "mwc" object for a game: its canonical minimal-winning family.
// parse_game(game_to_mwc_line(v)) reproduces v's winning table exactly.
nlohmann::ordered_json game_to_mwc_json(const SimpleGame& v);
std::string game_to_mwc_line(const SimpleGame& v);

// {"index": id, "values": [rational strings], "decimal": [12-significant-
// digit approximations]}.
nlohmann::ordered_json power_vector_json(const std::string& index_id,
                                         const PowerVector& g);

// Identifies a corpus member: zero-based position in canonical enumeration
// order plus the game's one-line mwc form.
std::string corpus_game_id(std::uint64_t ordinal, const SimpleGame& v);

}  // namespace powerlab

#endif  // POWERLAB_GAME_IO_HPP
