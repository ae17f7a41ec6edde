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

#include "inftda/rational.hpp"

#include <gtest/gtest.h>

namespace inftda {
namespace {

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(ParseRational, Integers) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("18446744073709551616"),
            Rational(BigInt("18446744073709551616")));
}

TEST(ParseRational, Decimals) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("1.5"), Rational(3, 2));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2."), Rational(2));
}

TEST(ParseRational, Rejects) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("-1"), ParseError);
  EXPECT_THROW(parse_rational("+1"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
  EXPECT_THROW(parse_rational("1.5/2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("."), ParseError);
  EXPECT_THROW(parse_rational("1e3"), ParseError);
}

TEST(Rational, ToString) {
  EXPECT_EQ(rational_to_string(parse_rational("1/2")), "1/2");
  EXPECT_EQ(rational_to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(rational_to_string(parse_rational("0.1")), "1/10");
}

TEST(Rational, ToDouble) {
  EXPECT_DOUBLE_EQ(rational_to_double(parse_rational("1/2")), 0.5);
  EXPECT_DOUBLE_EQ(rational_to_double(parse_rational("1/3")), 1.0 / 3.0);
}

}  // namespace
}  // namespace inftda
