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

#include "gtest/gtest.h"
#include "kolmoverify/bittape.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/outcome.hpp"

namespace kolmoverify {
namespace {

TEST(BitTapeTest, StringRoundTrip) {
  BitTape t = BitTape::FromString("0110");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.ToString(), "0110");
  EXPECT_EQ(t.ToInteger(), 6u);
  EXPECT_EQ(BitTape::FromInteger(6, 4), t);
}

TEST(BitTapeTest, RejectsBadCharacters) {
  EXPECT_THROW(BitTape::FromString("01a"), ParseError);
  EXPECT_THROW(BitTape::FromHex("4:0xg"), ParseError);
  EXPECT_THROW(BitTape::FromHex("4:0x01"), ParseError);
  EXPECT_THROW(BitTape::FromHex("3:0x1"), ParseError);  // padding bit set
}

TEST(BitTapeTest, EmptyHex) {
  EXPECT_EQ(BitTape().ToHex(), "0:0x");
  EXPECT_EQ(BitTape::FromHex("0:0x"), BitTape());
}

TEST(BitTapeTest, OrderingIsLengthThenLexicographic) {
  EXPECT_LT(BitTape::FromString("1"), BitTape::FromString("00"));
  EXPECT_LT(BitTape::FromString("01"), BitTape::FromString("10"));
}

TEST(BitTapeTest, ConcatenateAndSlice) {
  BitTape c = Concatenate({BitTape::FromString("10"), BitTape::FromString("011")});
  EXPECT_EQ(c.ToString(), "10011");
  EXPECT_EQ(c.slice(1, 3).ToString(), "001");
}

TEST(OutcomeTest, BottomIsDistinctFromEmpty) {
  EXPECT_NE(Outcome::Bottom(), Outcome(BitTape()));
  EXPECT_LT(Outcome::Bottom(), Outcome(BitTape()));
  EXPECT_EQ(Outcome::Parse("⊥"), Outcome::Bottom());
  EXPECT_EQ(Outcome::Parse("01").ToString(), "01");
  EXPECT_EQ(Outcome::Bottom().ToString(), "⊥");
}

}  // namespace
}  // namespace kolmoverify
