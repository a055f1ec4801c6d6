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

#ifndef KOLMOVERIFY_STATS_HPP_
#define KOLMOVERIFY_STATS_HPP_

#include <cstddef>

namespace kolmoverify {

struct Interval {
  double lo = 0;
  double hi = 1;
  bool operator==(const Interval&) const = default;
};

// Wilson score interval at z standard deviations.
Interval Wilson(std::size_t successes, std::size_t trials, double z = 3.0);

// Binomial standard error sqrt(p(1-p)/trials).
double BinomialSigma(double p, std::size_t trials);

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_STATS_HPP_
