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

#include "powerlab/game_io.hpp"

#include <fstream>
#include <sstream>

#include "powerlab/errors.hpp"

namespace powerlab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_keys(const json& object,
                         const std::vector<std::string>& allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const std::string& key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InvalidInputError("unknown key \"" + item.key() +
                              "\" in game object");
    }
  }
}

const json& require_key(const json& object, const std::string& key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw InvalidInputError("missing key \"" + key + "\" in game object");
  }
  return *it;
}

Rational rational_field(const json& value, const std::string& field) {
  if (!value.is_string()) {
    throw InvalidInputError("field \"" + field +
                            "\" must be a rational string (\"p/q\" or "
                            "integer)");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError("field \"" + field + "\": " +
                            std::string(e.what()));
  }
}

SimpleGame parse_weighted_object(const json& object) {
  reject_unknown_keys(object, {"type", "quota", "weights"});
  WeightedRepresentation rep;
  rep.quota = rational_field(require_key(object, "quota"), "quota");
  const json& weights = require_key(object, "weights");
  if (!weights.is_array() || weights.empty()) {
    throw InvalidInputError(
        "field \"weights\" must be a nonempty array of rational strings");
  }
  for (const json& w : weights) {
    rep.weights.push_back(rational_field(w, "weights"));
  }
  try {
    return from_weighted(rep);
  } catch (const InvalidInputError& e) {
    throw InvalidInputError("invalid weighted game: " + std::string(e.what()));
  }
}

SimpleGame parse_mwc_object(const json& object) {
  reject_unknown_keys(object, {"type", "n", "minimal_winning"});
  const json& n_value = require_key(object, "n");
  if (!n_value.is_number_integer()) {
    throw InvalidInputError("field \"n\" must be an integer player count");
  }
  const int n = n_value.get<int>();
  const json& families = require_key(object, "minimal_winning");
  if (!families.is_array() || families.empty()) {
    throw InvalidInputError(
        "field \"minimal_winning\" must be a nonempty array of coalitions");
  }
  std::vector<Coalition> mwc;
  for (const json& entry : families) {
    if (!entry.is_array()) {
      throw InvalidInputError(
          "field \"minimal_winning\" entries must be arrays of players");
    }
    std::vector<int> players;
    for (const json& p : entry) {
      if (!p.is_number_integer()) {
        throw InvalidInputError(
            "field \"minimal_winning\" players must be integers");
      }
      players.push_back(p.get<int>());
    }
    mwc.push_back(Coalition::of(players));
  }
  try {
    return from_minimal_winning(n, mwc);
  } catch (const InvalidInputError& e) {
    throw InvalidInputError("invalid minimal-winning game: " +
                            std::string(e.what()));
  }
}

}  // namespace

SimpleGame parse_game(const std::string& text) {
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError("malformed game JSON: " + std::string(e.what()));
  }
  if (!object.is_object()) {
    throw InvalidInputError("game file must hold a single JSON object");
  }
  const json& type = require_key(object, "type");
  if (!type.is_string()) {
    throw InvalidInputError("field \"type\" must be a string");
  }
  const std::string type_name = type.get<std::string>();
  if (type_name == "weighted") return parse_weighted_object(object);
  if (type_name == "mwc") return parse_mwc_object(object);
  throw InvalidInputError("field \"type\" must be \"weighted\" or \"mwc\", "
                          "got \"" +
                          type_name + "\"");
}

SimpleGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot read game file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

ordered_json game_to_mwc_json(const SimpleGame& v) {
  ordered_json families = ordered_json::array();
  for (Coalition s : minimal_winning(v)) {
    families.push_back(s.players());
  }
  ordered_json object;
  object["type"] = "mwc";
  object["n"] = v.num_players();
  object["minimal_winning"] = std::move(families);
  return object;
}

std::string game_to_mwc_line(const SimpleGame& v) {
  return game_to_mwc_json(v).dump();
}

ordered_json power_vector_json(const std::string& index_id,
                               const PowerVector& g) {
  ordered_json values = ordered_json::array();
  ordered_json decimals = ordered_json::array();
  for (const Rational& value : g.values) {
    values.push_back(rational_to_string(value));
    decimals.push_back(rational_to_decimal12(value));
  }
  ordered_json object;
  object["index"] = index_id;
  object["values"] = std::move(values);
  object["decimal"] = std::move(decimals);
  return object;
}

std::string corpus_game_id(std::uint64_t ordinal, const SimpleGame& v) {
  return std::to_string(ordinal) + ":" + game_to_mwc_line(v);
}

}  // namespace powerlab
