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

#ifndef KOLMOVERIFY_SRC_EXPERIMENTS_INTERNAL_HPP_
#define KOLMOVERIFY_SRC_EXPERIMENTS_INTERNAL_HPP_

#include <cmath>
#include <sstream>
#include <string>

namespace kolmoverify::experiments::internal {

// Shortest round-tripping decimal; infinities as "+inf"/"-inf".
inline std::string Num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace kolmoverify::experiments::internal

#endif  // KOLMOVERIFY_SRC_EXPERIMENTS_INTERNAL_HPP_
