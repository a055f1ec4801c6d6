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

#ifndef KOLMOVERIFY_SRC_JSON_UTIL_HPP_
#define KOLMOVERIFY_SRC_JSON_UTIL_HPP_

#include <cmath>

#include "json.hpp"

namespace kolmoverify {

// Finite values as numbers; infinities as "+inf"/"-inf"; NaN as null.
inline nlohmann::json JsonNumber(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_SRC_JSON_UTIL_HPP_
