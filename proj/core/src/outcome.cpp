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

#include "kolmoverify/outcome.hpp"

namespace kolmoverify {

Outcome Outcome::Parse(std::string_view s) {
  if (s == kBottomSymbol) return Bottom();
  return Outcome(BitTape::FromString(s));
}

std::string Outcome::ToString() const {
  return is_bottom() ? std::string(kBottomSymbol) : value_->ToString();
}

std::strong_ordering Outcome::operator<=>(const Outcome& other) const {
  if (is_bottom() || other.is_bottom()) {
    return other.is_bottom() <=> is_bottom();
  }
  return *value_ <=> *other.value_;
}

}  // namespace kolmoverify
