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

#ifndef KOLMOVERIFY_OUTCOME_HPP_
#define KOLMOVERIFY_OUTCOME_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kolmoverify/bittape.hpp"

namespace kolmoverify {

// Either a bit string or the failure symbol ⊥. ⊥ orders before every string
// and is distinct from the empty string.
class Outcome {
 public:
  Outcome() = default;  // ⊥
  Outcome(BitTape value) : value_(std::move(value)) {}  // NOLINT implicit

  static Outcome Bottom() { return Outcome(); }
  // "⊥" or a string over {0,1}.
  static Outcome Parse(std::string_view s);

  bool is_bottom() const { return !value_.has_value(); }
  const BitTape& value() const { return *value_; }

  std::string ToString() const;

  bool operator==(const Outcome&) const = default;
  std::strong_ordering operator<=>(const Outcome& other) const;

 private:
  std::optional<BitTape> value_;
};

inline constexpr std::string_view kBottomSymbol = "⊥";

using Tuple = std::vector<Outcome>;

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_OUTCOME_HPP_
