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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "powerlab/axioms.hpp"
#include "powerlab/design.hpp"
#include "powerlab/enumeration.hpp"
#include "powerlab/errors.hpp"
#include "powerlab/game_io.hpp"
#include "powerlab/indices.hpp"
#include "powerlab/parallel.hpp"

namespace {

using nlohmann::ordered_json;
using namespace powerlab;

// Rationals print exactly; decimals are 12-significant-digit companions and
// must never be the authoritative value.
std::string decimal12_string(const Rational& r) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", rational_to_decimal12(r));
  return buffer;
}

std::string rational_with_decimal(const Rational& r) {
  return rational_to_string(r) + " (" + decimal12_string(r) + ")";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

GameClass parse_class_flag(const std::string& text) {
  return parse_game_class(text);  // throws InvalidInputError on bad names
}

CorpusSpec parse_corpus_flag(const std::string& text, bool dedup) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw InvalidInputError(
        "corpus must have the form class:n, e.g. weighted:4, got \"" + text +
        "\"");
  }
  CorpusSpec spec;
  spec.game_class = parse_class_flag(text.substr(0, colon));
  const std::string count = text.substr(colon + 1);
  for (char c : count) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInputError("corpus player count must be an integer, got \"" +
                              count + "\"");
    }
  }
  spec.n = std::stoi(count);
  spec.dedup = dedup ? Dedup::kUpToPermutation : Dedup::kNone;
  spec.validate();
  return spec;
}

std::vector<std::string> resolve_index_ids(const std::string& flag) {
  if (flag == "all") {
    std::vector<std::string> ids;
    for (const IndexInfo& info : index_registry()) ids.push_back(info.id);
    return ids;
  }
  std::vector<std::string> ids = split_list(flag);
  if (ids.empty()) throw InvalidInputError("index list must be nonempty");
  for (const std::string& id : ids) find_index(id);  // validate early
  return ids;
}

Coalition parse_players_flag(const std::string& text) {
  std::vector<int> players;
  for (const std::string& item : split_list(text)) {
    if (item.empty()) {
      throw InvalidInputError(
          "keep must be a comma-separated list of players, got \"" + text +
          "\"");
    }
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidInputError("player \"" + item + "\" is not an integer");
      }
    }
    players.push_back(std::stoi(item));
  }
  if (players.empty()) {
    throw InvalidInputError("keep must name at least one player");
  }
  return Coalition::of(players);
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const std::string& index_flag, const std::string& game_file,
                bool json_mode) {
  const SimpleGame game = load_game(game_file);
  const bool all = index_flag == "all";

  if (!all) {
    const IndexInfo& info = find_index(index_flag);
    if (info.requires_complete && !is_complete(game)) {
      throw InvalidInputError("index \"" + info.id +
                              "\" requires a complete game");
    }
    const PowerVector g = info.compute(game);
    if (json_mode) {
      std::cout << power_vector_json(info.id, g).dump() << "\n";
    } else {
      std::string rationals, decimals;
      for (const Rational& r : g.values) {
        rationals += (rationals.empty() ? "" : " ") + rational_to_string(r);
        decimals += (decimals.empty() ? "" : " ") + decimal12_string(r);
      }
      std::cout << info.id << ": " << rationals << " | " << decimals << "\n";
    }
    return 0;
  }

  const bool complete = is_complete(game);
  ordered_json results = ordered_json::array();
  for (const IndexInfo& info : index_registry()) {
    if (info.requires_complete && !complete) {
      if (json_mode) {
        results.push_back(
            {{"index", info.id}, {"error", "requires a complete game"}});
      } else {
        std::cout << info.id << ": n/a (requires a complete game)\n";
      }
      continue;
    }
    std::optional<PowerVector> g;
    try {
      g = info.compute(game);
    } catch (const CapError& e) {
      if (json_mode) {
        results.push_back({{"index", info.id}, {"error", e.what()}});
      } else {
        std::cout << info.id << ": n/a (" << e.what() << ")\n";
      }
      continue;
    }
    if (json_mode) {
      results.push_back(power_vector_json(info.id, *g));
    } else {
      std::string rationals, decimals;
      for (const Rational& r : g->values) {
        rationals += (rationals.empty() ? "" : " ") + rational_to_string(r);
        decimals += (decimals.empty() ? "" : " ") + decimal12_string(r);
      }
      std::cout << info.id << ": " << rationals << " | " << decimals << "\n";
    }
  }
  if (json_mode) {
    std::cout << ordered_json{{"results", results}}.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

void print_check_rows(const std::vector<GameAxiomResult>& rows) {
  for (const GameAxiomResult& row : rows) {
    std::cout << row.label << ": " << verdict_id(row.verdict);
    if (!row.witness.empty()) std::cout << ", witness " << row.witness;
    std::cout << "\n";
  }
}

ordered_json check_rows_json(const std::vector<GameAxiomResult>& rows) {
  ordered_json out = ordered_json::array();
  for (const GameAxiomResult& row : rows) {
    ordered_json entry{{"axiom", axiom_id(row.axiom)},
                       {"label", row.label},
                       {"verdict", verdict_id(row.verdict)}};
    if (!row.witness.empty()) entry["witness"] = row.witness;
    out.push_back(entry);
  }
  return out;
}

int run_check(const std::string& index_flag, const std::string& game_file,
              bool json_mode) {
  const SimpleGame game = load_game(game_file);
  const std::vector<std::string> ids = resolve_index_ids(index_flag);

  if (json_mode) {
    ordered_json checks = ordered_json::array();
    for (const std::string& id : ids) {
      checks.push_back({{"index", id},
                        {"axioms", check_rows_json(
                                       check_game(find_index(id), game))}});
    }
    std::cout << ordered_json{{"game", game_to_mwc_json(game)},
                              {"checks", checks}}
                     .dump()
              << "\n";
    return 0;
  }

  const bool headers = ids.size() > 1;
  bool first = true;
  for (const std::string& id : ids) {
    if (headers) {
      if (!first) std::cout << "\n";
      std::cout << "[" << id << "]\n";
    }
    first = false;
    print_check_rows(check_game(find_index(id), game));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(const std::string& class_flag, int n, bool count_only,
                  bool dedup, bool json_mode) {
  CorpusSpec spec;
  spec.game_class = parse_class_flag(class_flag);
  spec.n = n;
  spec.dedup = dedup ? Dedup::kUpToPermutation : Dedup::kNone;
  spec.validate();

  if (count_only) {
    const std::uint64_t count = count_corpus(spec);
    if (json_mode) {
      std::cout << ordered_json{{"class", game_class_id(spec.game_class)},
                                {"n", spec.n},
                                {"dedup", dedup},
                                {"count", count}}
                       .dump()
                << "\n";
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }

  // Games stream out one at a time; corpora get large enough that
  // materializing the whole list first is not worth the memory.
  if (json_mode) {
    std::cout << "{\"class\":" << ordered_json(game_class_id(spec.game_class))
              << ",\"n\":" << spec.n
              << ",\"dedup\":" << (dedup ? "true" : "false") << ",\"games\":[";
    std::uint64_t count = 0;
    enumerate_corpus(spec, [&](const SimpleGame& game) {
      if (count > 0) std::cout << ",";
      std::cout << game_to_mwc_json(game).dump();
      ++count;
      return true;
    });
    std::cout << "],\"count\":" << count << "}\n";
  } else {
    enumerate_corpus(spec, [&](const SimpleGame& game) {
      std::cout << game_to_mwc_line(game) << "\n";
      return true;
    });
  }
  return 0;
}

// ---------------------------------------------------------------------------
// matrix

int run_matrix(const std::string& class_flag, int n,
               const std::string& indices_flag, bool dedup, bool json_mode) {
  CorpusSpec spec;
  spec.game_class = parse_class_flag(class_flag);
  spec.n = n;
  spec.dedup = dedup ? Dedup::kUpToPermutation : Dedup::kNone;
  spec.validate();
  const PropertyMatrix matrix =
      property_matrix(spec, resolve_index_ids(indices_flag));

  if (!json_mode) {
    std::cout << matrix_to_csv(matrix);
    return 0;
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t row = 0; row < matrix.index_ids.size(); ++row) {
    ordered_json cells = ordered_json::array();
    for (std::size_t col = 0; col < matrix.columns.size(); ++col) {
      const AxiomReport& report = matrix.at(row, col);
      ordered_json cell{{"column", report.column},
                        {"verdict", verdict_id(report.verdict)}};
      if (!report.counterexamples.empty()) {
        ordered_json examples = ordered_json::array();
        for (const Counterexample& ce : report.counterexamples) {
          examples.push_back(
              {{"game_id", ce.game_id}, {"witness", ce.witness}});
        }
        cell["counterexamples"] = examples;
      }
      cells.push_back(cell);
    }
    rows.push_back({{"index", matrix.index_ids[row]}, {"cells", cells}});
  }
  std::cout << ordered_json{{"class", game_class_id(spec.game_class)},
                            {"n", spec.n},
                            {"columns", matrix.columns},
                            {"rows", rows}}
                   .dump()
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// design

int run_design(const std::string& corpus_flag, const std::string& base_a,
               const std::string& base_b, bool dedup, bool json_mode) {
  const CorpusSpec spec = parse_corpus_flag(corpus_flag, dedup);
  const LmLambdaReport report = minimal_lm_lambda(spec, base_a, base_b);

  if (json_mode) {
    ordered_json witnesses = ordered_json::array();
    for (const LmLambdaWitness& w : report.witnesses) {
      witnesses.push_back({{"game_id", w.game_id},
                           {"pair", {w.i, w.j}},
                           {"bound", rational_to_string(w.bound)}});
    }
    ordered_json out;
    out["feasible"] = report.feasible;
    if (report.feasible) {
      out["lambda_star"] = rational_to_string(report.lambda_star);
      out["decimal"] = rational_to_decimal12(report.lambda_star);
    } else {
      out["lambda_star"] = nullptr;
    }
    out["witnesses"] = witnesses;
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (report.feasible) {
    std::cout << "lambda_star: " << rational_with_decimal(report.lambda_star)
              << "\n";
  } else {
    std::cout << "lambda_star: infeasible\n";
  }
  for (const LmLambdaWitness& w : report.witnesses) {
    std::cout << "witness: game " << w.game_id << " pair (" << w.i << ","
              << w.j << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const std::string& index_flag, const std::string& class_flag,
                 int n, bool dedup, bool json_mode) {
  CorpusSpec spec;
  spec.game_class = parse_class_flag(class_flag);
  spec.n = n;
  spec.dedup = dedup ? Dedup::kUpToPermutation : Dedup::kNone;
  const SpectrumReport report = largest_player_spectrum(index_flag, spec);

  if (json_mode) {
    const auto entries_json = [](const std::vector<SpectrumEntry>& entries) {
      ordered_json out = ordered_json::array();
      for (const SpectrumEntry& e : entries) {
        out.push_back({{"value", rational_to_string(e.value)},
                       {"decimal", rational_to_decimal12(e.value)},
                       {"count", e.count}});
      }
      return out;
    };
    ordered_json out;
    out["index"] = report.index_id;
    out["class"] = game_class_id(spec.game_class);
    out["n"] = spec.n;
    out["spectrum"] = entries_json(report.attained);
    if (report.max_below_one) {
      out["max_below_one"] = rational_to_string(*report.max_below_one);
    } else {
      out["max_below_one"] = nullptr;
    }
    out["open_interval"] = entries_json(report.open_interval);
    std::cout << out.dump() << "\n";
    return 0;
  }

  for (const SpectrumEntry& e : report.attained) {
    std::cout << "value " << rational_with_decimal(e.value) << ": " << e.count
              << (e.count == 1 ? " game" : " games") << "\n";
  }
  std::cout << "max_below_one: "
            << (report.max_below_one ? rational_to_string(*report.max_below_one)
                                     : std::string("none"))
            << "\n";
  std::string interval;
  for (const SpectrumEntry& e : report.open_interval) {
    interval += (interval.empty() ? "" : ", ") + rational_to_string(e.value);
  }
  std::cout << "open-interval (1/2,1): "
            << (interval.empty() ? "none" : interval) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// approx

int run_approx(const std::string& game_file, const std::string& index_flag,
               const std::string& keep_flag, bool json_mode) {
  const AlonEdelmanQuery query{load_game(game_file), index_flag,
                               parse_players_flag(keep_flag)};
  const AlonEdelmanReport report = alon_edelman_search(query);

  if (json_mode) {
    ordered_json out;
    out["best_game"] = game_to_mwc_json(report.best_game);
    out["distance"] = rational_to_string(report.distance);
    out["distance_decimal"] = rational_to_decimal12(report.distance);
    out["epsilon"] = rational_to_string(report.epsilon);
    out["epsilon_decimal"] = rational_to_decimal12(report.epsilon);
    if (report.ratio) {
      out["ratio"] = rational_to_string(*report.ratio);
      out["ratio_decimal"] = rational_to_decimal12(*report.ratio);
    } else {
      out["ratio"] = nullptr;
      out["note"] = report.note;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "best_game: " << game_to_mwc_line(report.best_game) << "\n";
  std::cout << "distance: " << rational_with_decimal(report.distance) << "\n";
  std::cout << "epsilon: " << rational_with_decimal(report.epsilon) << "\n";
  if (report.ratio) {
    std::cout << "ratio: " << rational_with_decimal(*report.ratio) << "\n";
  } else {
    std::cout << "ratio: none (" << report.note << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for simple games and power indices"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit the structured report form");

  std::string index_flag = "all";
  std::string game_file;
  std::string class_flag;
  std::string corpus_flag;
  std::string indices_flag = "all";
  std::string base_a;
  std::string base_b;
  std::string keep_flag;
  int n = 0;
  bool count_only = false;
  bool dedup = false;

  CLI::App* compute = app.add_subcommand("compute", "Power index values");
  compute->fallthrough();
  compute->add_option("--index", index_flag, "Index id, or \"all\"");
  compute->add_option("--game", game_file, "Game file")->required();

  CLI::App* check = app.add_subcommand("check", "Per-game axiom verdicts");
  check->fallthrough();
  check->add_option("--index", index_flag, "Index id, or \"all\"");
  check->add_option("--game", game_file, "Game file")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Stream or count a game corpus");
  enumerate->fallthrough();
  enumerate->add_option("--class", class_flag, "simple|complete|weighted")
      ->required();
  enumerate->add_option("--n", n, "Player count")->required();
  enumerate->add_flag("--count-only", count_only, "Print the count alone");
  enumerate->add_flag("--dedup", dedup, "One game per relabeling class");

  CLI::App* matrix =
      app.add_subcommand("matrix", "Axiom-by-index CSV over a corpus");
  matrix->fallthrough();
  matrix->add_option("--class", class_flag, "simple|complete|weighted")
      ->required();
  matrix->add_option("--n", n, "Player count")->required();
  matrix->add_option("--indices", indices_flag,
                     "Comma-separated index ids, or \"all\"");
  matrix->add_flag("--dedup", dedup, "One game per relabeling class");

  CLI::App* design =
      app.add_subcommand("design", "Minimal locally-monotonic combination");
  design->fallthrough();
  design->add_option("--corpus", corpus_flag, "class:n, e.g. weighted:4")
      ->required();
  design->add_option("--base-a", base_a, "Efficient base index")->required();
  design->add_option("--base-b", base_b, "Efficient base index")->required();
  design->add_flag("--dedup", dedup, "One game per relabeling class");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Largest-value distribution");
  spectrum->fallthrough();
  spectrum->add_option("--index", index_flag, "Index id")->required();
  spectrum->add_option("--class", class_flag, "complete|weighted")->required();
  spectrum->add_option("--n", n, "Player count")->required();
  spectrum->add_flag("--dedup", dedup, "One game per relabeling class");

  CLI::App* approx =
      app.add_subcommand("approx", "Best approximation on a player subset");
  approx->fallthrough();
  approx->add_option("--game", game_file, "Game file")->required();
  approx->add_option("--index", index_flag, "Index id")->required();
  approx->add_option("--keep", keep_flag, "Players to keep, e.g. 1,2")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    thread_budget();  // validate POWERLAB_THREADS before any work
    if (compute->parsed()) return run_compute(index_flag, game_file, json_mode);
    if (check->parsed()) return run_check(index_flag, game_file, json_mode);
    if (enumerate->parsed()) {
      return run_enumerate(class_flag, n, count_only, dedup, json_mode);
    }
    if (matrix->parsed()) {
      return run_matrix(class_flag, n, indices_flag, dedup, json_mode);
    }
    if (design->parsed()) {
      return run_design(corpus_flag, base_a, base_b, dedup, json_mode);
    }
    if (spectrum->parsed()) {
      return run_spectrum(index_flag, class_flag, n, dedup, json_mode);
    }
    if (approx->parsed()) {
      return run_approx(game_file, index_flag, keep_flag, json_mode);
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
