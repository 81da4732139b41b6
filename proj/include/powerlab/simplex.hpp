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

#ifndef POWERLAB_SIMPLEX_HPP
#define POWERLAB_SIMPLEX_HPP

#include <vector>

#include "powerlab/rational.hpp"

namespace powerlab::lp {

enum class Rel { kLessEq, kGreaterEq, kEqual };

struct Row {
  std::vector<Rational> coeffs;  // length = number of variables
  Rel rel = Rel::kLessEq;
  Rational rhs;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  Rational objective;
  std::vector<Rational> point;  // defined when status == kOptimal
};

// Exact two-phase primal simplex with Bland's rule over x >= 0.
// Dense tableaus; intended for the small systems this project solves
// (weightedness feasibility, nucleolus stage programs).
Result minimize(const std::vector<Rational>& objective,
                const std::vector<Row>& rows, int num_vars);

Result maximize(const std::vector<Rational>& objective,
                const std::vector<Row>& rows, int num_vars);

}  // namespace powerlab::lp

#endif  // POWERLAB_SIMPLEX_HPP
