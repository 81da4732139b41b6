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

#ifndef POWERLAB_RATIONAL_HPP
#define POWERLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace powerlab {

// All numeric work is exact. No floating point enters any computation;
// doubles appear only in serialized decimal approximations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a plain integer string. Throws InvalidInputError on
// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

// Decimal approximation rounded to 12 significant digits.
double rational_to_decimal12(const Rational& r);

BigInt factorial(unsigned n);

}  // namespace powerlab

#endif  // POWERLAB_RATIONAL_HPP
