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

#include "powerlab/indices.hpp"

#include <cstdint>
#include <utility>

#include "powerlab/errors.hpp"

namespace powerlab {

Rational PowerVector::sum() const {
  Rational total = 0;
  for (const Rational& value : values) total += value;
  return total;
}

namespace {

void validate_scheme(const SimpleGame& v, const CountingScheme& scheme) {
  const std::size_t n = static_cast<std::size_t>(v.num_players());
  if (scheme.transform == Transform::kCardinalityWeighted) {
    if (scheme.size_weights.size() != n) {
      throw InvalidInputError(
          "cardinality weighting needs one weight per coalition size 1..n");
    }
    for (const Rational& w : scheme.size_weights) {
      if (w < 0) {
        throw InvalidInputError("cardinality weights must be nonnegative");
      }
    }
  } else if (!scheme.size_weights.empty()) {
    throw InvalidInputError(
        "size weights only apply to the cardinality-weighted transform");
  }
}

// Invokes `credit(coalition, credited_members)` for every coalition of the
// selected type. Credited members arrive as a mask.
template <typename Credit>
void for_each_credited(const SimpleGame& v, CoalitionType selector,
                       Credit credit) {
  switch (selector) {
    case CoalitionType::kWinning: {
      const std::size_t size = v.num_coalitions();
      for (std::uint32_t m = 1; m < size; ++m) {
        if (v.wins_mask(m)) credit(Coalition(m), m);
      }
      return;
    }
    case CoalitionType::kCriticalPerPlayer: {
      const std::size_t size = v.num_coalitions();
      for (std::uint32_t m = 1; m < size; ++m) {
        if (!v.wins_mask(m)) continue;
        std::uint32_t critical = 0;
        for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
          const std::uint32_t bit = rest & -rest;
          if (!v.wins_mask(m & ~bit)) critical |= bit;
        }
        credit(Coalition(m), critical);
      }
      return;
    }
    case CoalitionType::kMinimalWinning: {
      for (Coalition s : minimal_winning(v)) credit(s, s.mask());
      return;
    }
    case CoalitionType::kShiftMinimalWinning: {
      for (Coalition s : shift_minimal_winning(v)) credit(s, s.mask());
      return;
    }
  }
}

}  // namespace

PowerVector count_index(const SimpleGame& v, const CountingScheme& scheme) {
  validate_scheme(v, scheme);
  const int n = v.num_players();
  PowerVector result;
  result.values.assign(n, Rational(0));

  for_each_credited(v, scheme.selector,
                    [&](Coalition u, std::uint32_t credited) {
                      if (credited == 0) return;
                      Rational share;
                      switch (scheme.transform) {
                        case Transform::kRawCount:
                          share = 1;
                          break;
                        case Transform::kEqualDivision:
                          share = Rational(1, std::popcount(credited));
                          break;
                        case Transform::kCardinalityWeighted:
                          share = scheme.size_weights[u.size() - 1];
                          break;
                      }
                      for (std::uint32_t rest = credited; rest != 0;
                           rest &= rest - 1) {
                        result.values[std::countr_zero(rest)] += share;
                      }
                    });

  if (scheme.normalize) {
    const Rational total = result.sum();
    if (total == 0) {
      throw InvalidInputError(
          "cannot normalize a scheme whose counts are all zero");
    }
    for (Rational& value : result.values) value /= total;
  }
  return result;
}

PowerVector pgi(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kMinimalWinning;
  scheme.transform = Transform::kRawCount;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector deegan_packel(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kMinimalWinning;
  scheme.transform = Transform::kEqualDivision;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector banzhaf(const SimpleGame& v, BanzhafVariant variant) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kCriticalPerPlayer;
  scheme.transform = Transform::kRawCount;
  scheme.normalize = variant == BanzhafVariant::kNormalized;
  PowerVector result = count_index(v, scheme);
  if (variant == BanzhafVariant::kRaw) {
    const Rational denominator =
        Rational(BigInt(1) << (v.num_players() - 1));
    for (Rational& value : result.values) value /= denominator;
  }
  return result;
}

PowerVector shapley_shubik(const SimpleGame& v) {
  const unsigned n = static_cast<unsigned>(v.num_players());
  CountingScheme scheme;
  scheme.selector = CoalitionType::kCriticalPerPlayer;
  scheme.transform = Transform::kCardinalityWeighted;
  scheme.size_weights.reserve(n);
  const BigInt n_factorial = factorial(n);
  for (unsigned s = 1; s <= n; ++s) {
    scheme.size_weights.emplace_back(factorial(s - 1) * factorial(n - s),
                                     n_factorial);
  }
  return count_index(v, scheme);
}

PowerVector johnston(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kCriticalPerPlayer;
  scheme.transform = Transform::kEqualDivision;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector koenig_braeuninger(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kWinning;
  scheme.transform = Transform::kRawCount;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector kb_equal_division(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kWinning;
  scheme.transform = Transform::kEqualDivision;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector shift_index(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kShiftMinimalWinning;
  scheme.transform = Transform::kRawCount;
  scheme.normalize = true;
  return count_index(v, scheme);
}

PowerVector shift_deegan_packel(const SimpleGame& v) {
  CountingScheme scheme;
  scheme.selector = CoalitionType::kShiftMinimalWinning;
  scheme.transform = Transform::kEqualDivision;
  scheme.normalize = true;
  return count_index(v, scheme);
}

const std::vector<IndexInfo>& index_registry() {
  static const std::vector<IndexInfo> registry = [] {
    std::vector<IndexInfo> entries;
    entries.push_back({"pgi", "Public Good index", true, false,
                       [](const SimpleGame& v) { return pgi(v); }});
    entries.push_back({"deegan-packel", "Deegan-Packel index", true, false,
                       [](const SimpleGame& v) { return deegan_packel(v); }});
    entries.push_back({"banzhaf-raw", "Penrose-Banzhaf index (raw)", false,
                       false, [](const SimpleGame& v) {
                         return banzhaf(v, BanzhafVariant::kRaw);
                       }});
    entries.push_back({"banzhaf", "Penrose-Banzhaf index (normalized)", true,
                       false, [](const SimpleGame& v) {
                         return banzhaf(v, BanzhafVariant::kNormalized);
                       }});
    entries.push_back({"shapley-shubik", "Shapley-Shubik index", true, false,
                       [](const SimpleGame& v) { return shapley_shubik(v); }});
    entries.push_back({"johnston", "Johnston index", true, false,
                       [](const SimpleGame& v) { return johnston(v); }});
    entries.push_back(
        {"koenig-braeuninger", "König-Bräuninger index", true, false,
         [](const SimpleGame& v) { return koenig_braeuninger(v); }});
    // The equal-division variant of winning-coalition counting has no
    // established name; the label below is this repository's own.
    entries.push_back(
        {"kb-equal-division", "König-Bräuninger index (equal-division variant)",
         true, false,
         [](const SimpleGame& v) { return kb_equal_division(v); }});
    entries.push_back({"shift", "Shift index", true, true,
                       [](const SimpleGame& v) { return shift_index(v); }});
    entries.push_back(
        {"shift-deegan-packel", "Shift-Deegan-Packel index", true, true,
         [](const SimpleGame& v) { return shift_deegan_packel(v); }});
    entries.push_back({"nucleolus", "Nucleolus", true, false,
                       [](const SimpleGame& v) { return nucleolus(v); }});
    return entries;
  }();
  return registry;
}

const IndexInfo& find_index(const std::string& id) {
  for (const IndexInfo& info : index_registry()) {
    if (info.id == id) return info;
  }
  std::string known;
  for (const IndexInfo& info : index_registry()) {
    if (!known.empty()) known += ", ";
    known += info.id;
  }
  throw InvalidInputError("unknown index id \"" + id + "\" (known: " + known +
                          ")");
}

}  // namespace powerlab
