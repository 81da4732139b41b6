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

#include "powerlab/rational.hpp"

#include <cstdio>
#include <cstdlib>

#include "powerlab/errors.hpp"

namespace powerlab {

namespace {

BigInt parse_bigint(const std::string& text, const std::string& whole) {
  if (text.empty()) {
    throw InvalidInputError("empty integer in rational \"" + whole + "\"");
  }
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) {
    throw InvalidInputError("malformed integer in rational \"" + whole + "\"");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidInputError("malformed integer in rational \"" + whole + "\"");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_bigint(text, text));
  }
  if (text.find('/', slash + 1) != std::string::npos) {
    throw InvalidInputError("malformed rational \"" + text + "\"");
  }
  BigInt num = parse_bigint(text.substr(0, slash), text);
  BigInt den = parse_bigint(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidInputError("zero denominator in rational \"" + text + "\"");
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_decimal12(const Rational& r) {
  // Round through a 12-significant-digit decimal string so serialized
  // output carries exactly that precision.
  double approx = r.convert_to<double>();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", approx);
  return std::strtod(buf, nullptr);
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace powerlab
