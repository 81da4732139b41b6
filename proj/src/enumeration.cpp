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

#include "powerlab/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "powerlab/errors.hpp"

namespace powerlab {

namespace {

// Winning tables for n <= 6 fit one 64-bit word: bit m holds v(m).
using Table = std::uint64_t;

std::vector<bool> table_to_vector(int n, Table table) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> winning(size);
  for (std::size_t m = 0; m < size; ++m) {
    winning[m] = (table >> m) & 1;
  }
  return winning;
}

// Masks of all supersets of each nonempty coalition, as table bit patterns.
std::vector<Table> superset_patterns(int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Table> sup(full + 1, 0);
  for (std::uint32_t c = 1; c <= full; ++c) {
    for (std::uint32_t s = c;; s = (s + 1) | c) {
      sup[c] |= Table{1} << s;
      if (s == full) break;
    }
  }
  return sup;
}

// One comparison slice per unordered player pair: shift amounts that align
// v(S+i) with v(S+j), and the pattern of coalitions avoiding both.
struct PairSlice {
  std::uint32_t bi = 0;
  std::uint32_t bj = 0;
  Table avoid = 0;
};

std::vector<PairSlice> pair_slices(int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<PairSlice> slices;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      PairSlice slice;
      slice.bi = std::uint32_t{1} << (i - 1);
      slice.bj = std::uint32_t{1} << (j - 1);
      for (std::uint32_t m = 0; m <= full; ++m) {
        if ((m & (slice.bi | slice.bj)) == 0) slice.avoid |= Table{1} << m;
      }
      slices.push_back(slice);
    }
  }
  return slices;
}

// Completeness via word-level desirability: every pair must dominate in at
// least one direction across all coalitions avoiding both players.
bool table_is_complete(Table table, const std::vector<PairSlice>& slices) {
  for (const PairSlice& slice : slices) {
    const Table with_i = (table >> slice.bi) & slice.avoid;
    const Table with_j = (table >> slice.bj) & slice.avoid;
    if ((with_j & ~with_i) != 0 && (with_i & ~with_j) != 0) return false;
  }
  return true;
}

// Mask-relabeling tables for every permutation of n players, matching
// SimpleGame::relabeled (new table at m = old table at tau(m)).
std::vector<std::vector<std::uint32_t>> permutation_mask_maps(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::vector<std::uint32_t>> maps;
  do {
    std::vector<std::uint32_t> map(full + 1, 0);
    for (std::uint32_t m = 0; m <= full; ++m) {
      std::uint32_t image = 0;
      for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
        int player = std::countr_zero(rest) + 1;
        image |= std::uint32_t{1} << (perm[player - 1] - 1);
      }
      map[m] = image;
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

Table relabel_table(int n, Table table,
                    const std::vector<std::uint32_t>& map) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  Table out = 0;
  for (std::uint32_t m = 0; m <= full; ++m) {
    out |= ((table >> map[m]) & 1) << m;
  }
  return out;
}

bool table_is_permutation_canonical(
    int n, Table table, const std::vector<std::vector<std::uint32_t>>& maps) {
  for (const auto& map : maps) {
    if (relabel_table(n, table, map) < table) return false;
  }
  return true;
}

struct Walker {
  int n = 0;
  GameClass game_class = GameClass::kSimple;
  bool dedup = false;
  std::vector<std::uint32_t> coalitions;  // nonempty, by (size, mask)
  std::vector<Table> sup;
  std::vector<PairSlice> slices;
  std::vector<std::vector<std::uint32_t>> perm_maps;
  const std::function<bool(const SimpleGame&)>* visit = nullptr;
  bool stopped = false;

  bool emit(Table table) {
    if (game_class != GameClass::kSimple && !table_is_complete(table, slices)) {
      return true;
    }
    if (dedup && !table_is_permutation_canonical(n, table, perm_maps)) {
      return true;
    }
    SimpleGame game =
        SimpleGame::from_table_unchecked(n, table_to_vector(n, table));
    if (game_class == GameClass::kWeighted && !is_weighted(game)) {
      return true;
    }
    if (!(*visit)(game)) {
      stopped = true;
      return false;
    }
    return true;
  }

  // Extends the current minimal-winning antichain with coalitions at or
  // after position `from`. A candidate already covered by the table is a
  // superset of a chosen coalition and would not be minimal.
  void walk(std::size_t from, Table table) {
    for (std::size_t idx = from; idx < coalitions.size() && !stopped; ++idx) {
      const std::uint32_t c = coalitions[idx];
      if ((table >> c) & 1) continue;
      const Table extended = table | sup[c];
      if (!emit(extended)) return;
      walk(idx + 1, extended);
    }
  }
};

}  // namespace

GameClass parse_game_class(const std::string& text) {
  if (text == "simple") return GameClass::kSimple;
  if (text == "complete") return GameClass::kComplete;
  if (text == "weighted") return GameClass::kWeighted;
  throw InvalidInputError("unknown game class \"" + text +
                          "\" (expected simple, complete, or weighted)");
}

std::string game_class_id(GameClass game_class) {
  switch (game_class) {
    case GameClass::kSimple:
      return "simple";
    case GameClass::kComplete:
      return "complete";
    case GameClass::kWeighted:
      return "weighted";
  }
  return "simple";
}

void CorpusSpec::validate() const {
  if (n < 1) {
    throw CapError("corpus player count must be at least 1");
  }
  const int cap = game_class == GameClass::kWeighted ? 6 : 5;
  if (n > cap) {
    throw CapError("corpus player count " + std::to_string(n) +
                   " exceeds the cap of " + std::to_string(cap) + " for the " +
                   game_class_id(game_class) + " class");
  }
}

void enumerate_corpus(const CorpusSpec& spec,
                      const std::function<bool(const SimpleGame&)>& visit) {
  spec.validate();
  Walker walker;
  walker.n = spec.n;
  walker.game_class = spec.game_class;
  walker.dedup = spec.dedup == Dedup::kUpToPermutation;
  walker.visit = &visit;

  const std::uint32_t full = (std::uint32_t{1} << spec.n) - 1;
  for (std::uint32_t c = 1; c <= full; ++c) walker.coalitions.push_back(c);
  std::sort(walker.coalitions.begin(), walker.coalitions.end(),
            [](std::uint32_t a, std::uint32_t b) {
              const int pa = std::popcount(a);
              const int pb = std::popcount(b);
              if (pa != pb) return pa < pb;
              return a < b;
            });
  walker.sup = superset_patterns(spec.n);
  if (spec.game_class != GameClass::kSimple) {
    walker.slices = pair_slices(spec.n);
  }
  if (walker.dedup) walker.perm_maps = permutation_mask_maps(spec.n);

  walker.walk(0, 0);
}

std::uint64_t count_corpus(const CorpusSpec& spec) {
  std::uint64_t total = 0;
  enumerate_corpus(spec, [&total](const SimpleGame&) {
    ++total;
    return true;
  });
  return total;
}

std::vector<SimpleGame> materialize_corpus(const CorpusSpec& spec) {
  std::vector<SimpleGame> games;
  enumerate_corpus(spec, [&games](const SimpleGame& game) {
    games.push_back(game);
    return true;
  });
  return games;
}

}  // namespace powerlab
