// Copyright 2026 The InfTDA Authors
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

#ifndef INFTDA_RATIONAL_HPP_
#define INFTDA_RATIONAL_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "inftda/error.hpp"

namespace inftda {

// Arbitrary-precision integers and exact rationals. Privacy budgets and
// noise scales are kept exact end to end; the noise sampler never sees a
// rounded value.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt parse_big_uint(std::string_view digits, std::string_view full) {
  if (digits.empty()) {
    throw ParseError("invalid rational '" + std::string(full) + "'");
  }
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("invalid rational '" + std::string(full) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace detail

// Parses "p/q", an integer, or a decimal ("0.25" -> 1/4) into an exact
// non-negative rational. Used for privacy budgets, so the sign is rejected
// up front and "p/0" is an error.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty rational");
  }
  if (text.front() == '-' || text.front() == '+') {
    throw ParseError("rational '" + std::string(text) + "' must be unsigned");
  }
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (text.find('.') != std::string_view::npos ||
        text.find('/', slash + 1) != std::string_view::npos) {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    BigInt num = detail::parse_big_uint(text.substr(0, slash), text);
    BigInt den = detail::parse_big_uint(text.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("rational '" + std::string(text) +
                       "' has zero denominator");
    }
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    return Rational(detail::parse_big_uint(text, text));
  }
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  BigInt num = whole.empty() ? BigInt(0) : detail::parse_big_uint(whole, text);
  BigInt den = 1;
  for (char ch : frac) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    num = num * 10 + (ch - '0');
    den *= 10;
  }
  return Rational(num, den);
}

inline std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/" + denominator(value).str();
  }
  return out;
}

inline double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace inftda

#endif  // INFTDA_RATIONAL_HPP_
