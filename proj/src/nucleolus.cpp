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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "powerlab/errors.hpp"
#include "powerlab/simplex.hpp"

namespace powerlab {

namespace {

// Mutually reduced equality system over x_1..x_n, used to accumulate the
// coalitions fixed at their final excess level. Rows keep a unit pivot
// column that is zero in every other row, so a full-rank system reads off
// its unique solution directly.
class EqualitySystem {
 public:
  explicit EqualitySystem(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces (coeffs, rhs) by the stored rows. Returns the remainder; a
  // zero coefficient vector means the equality is implied (rhs 0) or
  // contradicts the system (rhs nonzero).
  std::pair<std::vector<Rational>, Rational> reduce(
      std::vector<Rational> coeffs, Rational rhs) const {
    for (const Row& row : rows_) {
      const Rational factor = coeffs[row.pivot];
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) coeffs[j] -= factor * row.coeffs[j];
      rhs -= factor * row.rhs;
    }
    return {std::move(coeffs), std::move(rhs)};
  }

  bool implies(const std::vector<Rational>& coeffs, const Rational& rhs) const {
    auto [rest, remainder] = reduce(coeffs, rhs);
    for (const Rational& c : rest) {
      if (c != 0) return false;
    }
    return remainder == 0;
  }

  // Adds an equality; returns false when it was already implied. A
  // contradictory row signals a bug in the caller's fixing logic.
  bool add(std::vector<Rational> coeffs, Rational rhs) {
    auto [rest, remainder] = reduce(std::move(coeffs), std::move(rhs));
    int pivot = -1;
    for (int j = 0; j < n_; ++j) {
      if (rest[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      if (remainder != 0) {
        throw std::logic_error("inconsistent equality while fixing excesses");
      }
      return false;
    }
    const Rational inv = 1 / rest[pivot];
    for (int j = 0; j < n_; ++j) rest[j] *= inv;
    remainder *= inv;
    for (Row& row : rows_) {
      const Rational factor = row.coeffs[pivot];
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) row.coeffs[j] -= factor * rest[j];
      row.rhs -= factor * remainder;
    }
    rows_.push_back({std::move(rest), std::move(remainder), pivot});
    return true;
  }

  // With rank n every row is a resolved single variable.
  std::vector<Rational> solve() const {
    std::vector<Rational> x(n_, Rational(0));
    for (const Row& row : rows_) x[row.pivot] = row.rhs;
    return x;
  }

  std::vector<lp::Row> as_lp_rows(int num_vars) const {
    std::vector<lp::Row> out;
    for (const Row& row : rows_) {
      lp::Row lp_row;
      lp_row.coeffs = row.coeffs;
      lp_row.coeffs.resize(num_vars, Rational(0));
      lp_row.rel = lp::Rel::kEqual;
      lp_row.rhs = row.rhs;
      out.push_back(std::move(lp_row));
    }
    return out;
  }

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
    int pivot = 0;
  };

  int n_;
  std::vector<Row> rows_;
};

std::vector<Rational> coalition_row(int n, std::uint32_t mask) {
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    coeffs[std::countr_zero(rest)] = 1;
  }
  return coeffs;
}

// x(S) for every mask at once, by adding one member to a smaller sum.
std::vector<Rational> subset_sums(int n, const std::vector<Rational>& x) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Rational> sums(size, Rational(0));
  for (std::uint32_t m = 1; m < size; ++m) {
    const std::uint32_t low = m & -m;
    sums[m] = sums[m & (m - 1)] + x[std::countr_zero(low)];
  }
  return sums;
}

struct StageSolution {
  std::vector<Rational> x;
  Rational max_excess;  // the stage optimum t*
};

constexpr std::size_t kGenerationBatch = 16;

// Minimizes the largest excess over the free coalitions, subject to the
// fixed equalities, by row generation: solve with a working subset, scan
// the full family for violations, repeat. The substituted variable
// u = t + 1 is nonnegative because no excess of a proper coalition can
// drop below -1 on an imputation.
StageSolution solve_stage(const SimpleGame& v, const EqualitySystem& fixed,
                          const std::vector<std::uint32_t>& free_masks) {
  const int n = v.num_players();
  const int num_vars = n + 1;  // x_1..x_n, u
  std::vector<Rational> objective(num_vars, Rational(0));
  objective[n] = 1;

  std::vector<lp::Row> rows = fixed.as_lp_rows(num_vars);
  std::vector<bool> in_working(v.num_coalitions(), false);

  auto add_working = [&](std::uint32_t mask) {
    lp::Row row;
    row.coeffs = coalition_row(n, mask);
    row.coeffs.resize(num_vars, Rational(0));
    row.coeffs[n] = 1;
    row.rel = lp::Rel::kGreaterEq;
    row.rhs = Rational(v.wins_mask(mask) ? 1 : 0) + 1;
    rows.push_back(std::move(row));
    in_working[mask] = true;
  };

  for (;;) {
    lp::Result result = lp::minimize(objective, rows, num_vars);
    if (result.status != lp::Status::kOptimal) {
      throw std::logic_error("excess-minimization stage lost feasibility");
    }
    std::vector<Rational> x(result.point.begin(), result.point.begin() + n);
    const Rational t = result.point[n] - 1;

    const std::vector<Rational> sums = subset_sums(n, x);
    std::vector<std::pair<Rational, std::uint32_t>> violated;
    for (std::uint32_t mask : free_masks) {
      Rational excess = Rational(v.wins_mask(mask) ? 1 : 0) - sums[mask];
      if (excess > t && !in_working[mask]) {
        violated.emplace_back(std::move(excess), mask);
      }
    }
    if (violated.empty()) {
      return {std::move(x), t};
    }
    std::sort(violated.begin(), violated.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
              });
    for (std::size_t k = 0; k < violated.size() && k < kGenerationBatch; ++k) {
      add_working(violated[k].second);
    }
  }
}

// Whether coalition `target` is pinned at excess t* across the whole
// optimal region of the stage: maximize x(target) over that region and
// compare against the value that keeps the excess at t*. Row generation as
// above, over the region constraints x(S) >= v(S) - t*.
bool excess_is_pinned(const SimpleGame& v, const EqualitySystem& fixed,
                      const std::vector<std::uint32_t>& free_masks,
                      const Rational& t_star, std::uint32_t target) {
  const int n = v.num_players();
  std::vector<Rational> objective = coalition_row(n, target);
  const Rational pinned_value =
      Rational(v.wins_mask(target) ? 1 : 0) - t_star;

  std::vector<lp::Row> rows = fixed.as_lp_rows(n);
  std::vector<bool> in_working(v.num_coalitions(), false);

  for (;;) {
    lp::Result result = lp::maximize(objective, rows, n);
    if (result.status == lp::Status::kUnbounded) {
      throw std::logic_error("bounded region reported unbounded");
    }
    if (result.status != lp::Status::kOptimal) {
      throw std::logic_error("stage-optimal region lost feasibility");
    }
    const std::vector<Rational> sums = subset_sums(n, result.point);
    std::vector<std::pair<Rational, std::uint32_t>> violated;
    for (std::uint32_t mask : free_masks) {
      const Rational floor = Rational(v.wins_mask(mask) ? 1 : 0) - t_star;
      if (sums[mask] < floor && !in_working[mask]) {
        violated.emplace_back(floor - sums[mask], mask);
      }
    }
    if (violated.empty()) {
      return result.objective == pinned_value;
    }
    std::sort(violated.begin(), violated.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
              });
    for (std::size_t k = 0; k < violated.size() && k < kGenerationBatch; ++k) {
      const std::uint32_t mask = violated[k].second;
      lp::Row row;
      row.coeffs = coalition_row(n, mask);
      row.rel = lp::Rel::kGreaterEq;
      row.rhs = Rational(v.wins_mask(mask) ? 1 : 0) - t_star;
      rows.push_back(std::move(row));
      in_working[mask] = true;
    }
  }
}

}  // namespace

PowerVector nucleolus(const SimpleGame& v) {
  const int n = v.num_players();
  if (n > kNucleolusMaxPlayers) {
    throw CapError("nucleolus is capped at " +
                   std::to_string(kNucleolusMaxPlayers) + " players, got " +
                   std::to_string(n));
  }
  PowerVector result;
  if (n == 1) {
    result.values.assign(1, Rational(1));
    return result;
  }

  EqualitySystem fixed(n);
  fixed.add(std::vector<Rational>(n, Rational(1)), Rational(1));  // sum x = 1

  const std::uint32_t full = Coalition::grand(n).mask();
  std::vector<std::uint32_t> free_masks;
  for (std::uint32_t m = 1; m < full; ++m) free_masks.push_back(m);
  std::sort(free_masks.begin(), free_masks.end(),
            [](std::uint32_t a, std::uint32_t b) {
              return canonical_less(Coalition(a), Coalition(b));
            });

  while (fixed.rank() < n) {
    if (free_masks.empty()) {
      throw std::logic_error("free coalitions exhausted before full rank");
    }
    const StageSolution stage = solve_stage(v, fixed, free_masks);
    const std::vector<Rational> sums = subset_sums(n, stage.x);

    std::vector<std::uint32_t> still_free;
    std::size_t fixed_this_stage = 0;
    bool rank_complete = false;
    for (std::size_t idx = 0; idx < free_masks.size(); ++idx) {
      const std::uint32_t mask = free_masks[idx];
      if (rank_complete) {
        still_free.push_back(mask);
        continue;
      }
      const Rational excess =
          Rational(v.wins_mask(mask) ? 1 : 0) - sums[mask];
      if (excess != stage.max_excess) {
        still_free.push_back(mask);
        continue;
      }
      const std::vector<Rational> coeffs = coalition_row(n, mask);
      const Rational level =
          Rational(v.wins_mask(mask) ? 1 : 0) - stage.max_excess;
      bool pinned = fixed.implies(coeffs, level);
      if (!pinned) {
        pinned = excess_is_pinned(v, fixed, free_masks, stage.max_excess, mask);
      }
      if (pinned) {
        fixed.add(coeffs, level);
        ++fixed_this_stage;
        if (fixed.rank() == n) rank_complete = true;
      } else {
        still_free.push_back(mask);
      }
    }
    if (fixed_this_stage == 0) {
      throw std::logic_error("stage fixed no coalition");
    }
    free_masks = std::move(still_free);
  }

  result.values = fixed.solve();
  for (const Rational& value : result.values) {
    if (value < 0) {
      throw std::logic_error("nucleolus produced a negative payoff");
    }
  }
  return result;
}

}  // namespace powerlab
