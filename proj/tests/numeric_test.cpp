// Copyright 2026 The kolmoverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "gtest/gtest.h"
#include "kolmoverify/numeric.hpp"

namespace kolmoverify {
namespace {

TEST(NumericTest, Log2OfHugeRationals) {
  Rational tiny(3, Pow2(5000));
  EXPECT_NEAR(Log2(tiny), std::log2(3.0) - 5000, 1e-9);
  Rational big(Pow2(3000) * 5, 7);
  EXPECT_NEAR(Log2(big), 3000 + std::log2(5.0 / 7.0), 1e-9);
  EXPECT_EQ(Log2(Rational(0)), -kInf);
}

TEST(NumericTest, ToDouble) {
  EXPECT_EQ(ToDouble(Rational(1, 4)), 0.25);
  EXPECT_EQ(ToDouble(Rational(-3, 8)), -0.375);
  EXPECT_NEAR(ToDouble(Rational(1, 3)), 1.0 / 3.0, 1e-16);
  EXPECT_EQ(ToDouble(Rational(1, Pow2(1100))), 0.0);
}

TEST(NumericTest, DyadicRoundTrip) {
  Dyadic d = ToDyadic(Rational(19, 1024));
  EXPECT_EQ(d.num, 19);
  EXPECT_EQ(d.log2den, 10u);
  EXPECT_EQ(FromDyadic(d.num, d.log2den), Rational(19, 1024));
  EXPECT_THROW(ToDyadic(Rational(1, 3)), std::invalid_argument);
  EXPECT_TRUE(IsDyadic(Rational(5)));
}

TEST(NumericTest, DoublesAreExactlyDyadic) {
  for (double x : {0.1, 0.5, 3.75, 1e-300, 123456.789}) {
    Rational r = ExactRational(x);
    EXPECT_TRUE(IsDyadic(r));
    EXPECT_EQ(ToDouble(r), x);
  }
}

TEST(NumericTest, Binomial) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(Binomial(3, 4), 0);
}

}  // namespace
}  // namespace kolmoverify
