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

#include "powerlab/simplex.hpp"

#include <cstddef>
#include <utility>

#include "powerlab/errors.hpp"

namespace powerlab::lp {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> a;  // rows x cols, basic cols kept unit
  std::vector<Rational> rhs;             // one entry per row, >= 0 throughout
  std::vector<int> basis;                // basic column per row
};

void pivot(Tableau& t, std::size_t row, int col) {
  const Rational inv = 1 / t.a[row][col];
  for (Rational& v : t.a[row]) v *= inv;
  t.rhs[row] *= inv;
  for (std::size_t r = 0; r < t.a.size(); ++r) {
    if (r == row) continue;
    const Rational factor = t.a[r][col];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < t.a[r].size(); ++j) {
      t.a[r][j] -= factor * t.a[row][j];
    }
    t.rhs[r] -= factor * t.rhs[row];
  }
  t.basis[row] = col;
}

// Runs simplex iterations until the cost vector admits no improving column.
// Bland's rule (lowest eligible index for both the entering and the leaving
// variable) rules out cycling. Returns false on an unbounded ray.
bool optimize(Tableau& t, const std::vector<Rational>& cost) {
  const std::size_t cols = cost.size();
  for (;;) {
    int entering = -1;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational reduced = cost[j];
      for (std::size_t r = 0; r < t.a.size(); ++r) {
        if (cost[t.basis[r]] != 0) {
          reduced -= cost[t.basis[r]] * t.a[r][j];
        }
      }
      if (reduced < 0) {
        entering = static_cast<int>(j);
        break;
      }
    }
    if (entering < 0) return true;

    std::size_t leaving = t.a.size();
    Rational best;
    for (std::size_t r = 0; r < t.a.size(); ++r) {
      if (t.a[r][entering] <= 0) continue;
      Rational ratio = t.rhs[r] / t.a[r][entering];
      if (leaving == t.a.size() || ratio < best ||
          (ratio == best && t.basis[r] < t.basis[leaving])) {
        leaving = r;
        best = ratio;
      }
    }
    if (leaving == t.a.size()) return false;
    pivot(t, leaving, entering);
  }
}

Rational objective_value(const Tableau& t, const std::vector<Rational>& cost) {
  Rational value = 0;
  for (std::size_t r = 0; r < t.a.size(); ++r) {
    value += cost[t.basis[r]] * t.rhs[r];
  }
  return value;
}

}  // namespace

Result minimize(const std::vector<Rational>& objective,
                const std::vector<Row>& rows, int num_vars) {
  if (objective.size() != static_cast<std::size_t>(num_vars)) {
    throw InvalidInputError("objective length does not match variable count");
  }
  for (const Row& row : rows) {
    if (row.coeffs.size() != static_cast<std::size_t>(num_vars)) {
      throw InvalidInputError("constraint length does not match variable count");
    }
  }

  // Standard form: one slack or surplus column per inequality, one
  // artificial column per row that lacks an obvious basic variable, all
  // right-hand sides normalized nonnegative.
  const std::size_t m = rows.size();
  std::size_t num_slack = 0;
  for (const Row& row : rows) {
    if (row.rel != Rel::kEqual) ++num_slack;
  }
  const std::size_t slack_base = static_cast<std::size_t>(num_vars);
  const std::size_t art_base = slack_base + num_slack;

  Tableau t;
  t.a.assign(m, {});
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, -1);

  std::size_t next_slack = slack_base;
  std::size_t num_art = 0;
  std::vector<std::size_t> art_col(m, 0);
  std::vector<bool> has_art(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Rational> coeffs = rows[r].coeffs;
    Rational rhs = rows[r].rhs;
    Rel rel = rows[r].rel;
    if (rhs < 0) {
      for (Rational& v : coeffs) v = -v;
      rhs = -rhs;
      if (rel == Rel::kLessEq) {
        rel = Rel::kGreaterEq;
      } else if (rel == Rel::kGreaterEq) {
        rel = Rel::kLessEq;
      }
    }
    t.a[r] = std::move(coeffs);
    t.a[r].resize(art_base, Rational(0));
    t.rhs[r] = std::move(rhs);
    if (rel == Rel::kLessEq) {
      t.a[r][next_slack] = 1;
      t.basis[r] = static_cast<int>(next_slack);
      ++next_slack;
    } else {
      if (rel == Rel::kGreaterEq) {
        t.a[r][next_slack] = -1;
        ++next_slack;
      }
      has_art[r] = true;
      art_col[r] = art_base + num_art;
      ++num_art;
    }
  }
  const std::size_t total_cols = art_base + num_art;
  for (std::size_t r = 0; r < m; ++r) {
    t.a[r].resize(total_cols, Rational(0));
    if (has_art[r]) {
      t.a[r][art_col[r]] = 1;
      t.basis[r] = static_cast<int>(art_col[r]);
    }
  }

  Result result;
  if (num_art > 0) {
    std::vector<Rational> phase1(total_cols, Rational(0));
    for (std::size_t j = art_base; j < total_cols; ++j) phase1[j] = 1;
    if (!optimize(t, phase1)) return result;  // cannot happen: bounded below
    if (objective_value(t, phase1) != 0) return result;

    // Kick leftover artificials out of the basis; a row that offers no real
    // pivot is a redundant constraint and gets dropped.
    for (std::size_t r = 0; r < t.a.size();) {
      if (t.basis[r] < static_cast<int>(art_base)) {
        ++r;
        continue;
      }
      int replacement = -1;
      for (std::size_t j = 0; j < art_base; ++j) {
        if (t.a[r][j] != 0) {
          replacement = static_cast<int>(j);
          break;
        }
      }
      if (replacement >= 0) {
        pivot(t, r, replacement);
        ++r;
      } else {
        t.a.erase(t.a.begin() + r);
        t.rhs.erase(t.rhs.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
  }
  for (std::size_t r = 0; r < t.a.size(); ++r) {
    t.a[r].resize(art_base);
  }

  std::vector<Rational> cost(art_base, Rational(0));
  for (std::size_t j = 0; j < static_cast<std::size_t>(num_vars); ++j) {
    cost[j] = objective[j];
  }
  if (!optimize(t, cost)) {
    result.status = Status::kUnbounded;
    return result;
  }

  result.status = Status::kOptimal;
  result.objective = objective_value(t, cost);
  result.point.assign(num_vars, Rational(0));
  for (std::size_t r = 0; r < t.a.size(); ++r) {
    if (t.basis[r] < num_vars) {
      result.point[t.basis[r]] = t.rhs[r];
    }
  }
  return result;
}

Result maximize(const std::vector<Rational>& objective,
                const std::vector<Row>& rows, int num_vars) {
  std::vector<Rational> negated(objective.size());
  for (std::size_t j = 0; j < objective.size(); ++j) negated[j] = -objective[j];
  Result result = minimize(negated, rows, num_vars);
  if (result.status == Status::kOptimal) {
    result.objective = -result.objective;
  }
  return result;
}

}  // namespace powerlab::lp
