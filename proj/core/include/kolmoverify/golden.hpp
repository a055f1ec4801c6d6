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

#ifndef KOLMOVERIFY_GOLDEN_HPP_
#define KOLMOVERIFY_GOLDEN_HPP_

#include <string>
#include <vector>

namespace kolmoverify::golden {

// One frozen complexity value: uKt or quKt of `x` at (t, m = |x|).
struct ComplexityGolden {
  std::string flavor;  // "ukt" | "qukt"
  std::string x;
  unsigned t = 0;
  double value = 0;
};

// Constants measured once against corpus v1 and frozen.
struct Goldens {
  unsigned coding_t = 0;
  unsigned coding_quantum_t = 0;
  unsigned embed_t = 0;
  double c_univ = 0;
  double c_q = 0;
  double c_embed = 0;
  std::vector<ComplexityGolden> complexities;
};

// Recomputes every golden from scratch.
Goldens Compute();
std::string Serialize(const Goldens& g);
Goldens Parse(const std::string& json_text);
Goldens Load(const std::string& path);
// One line per drifted value; empty when every value matches exactly.
std::vector<std::string> Diff(const Goldens& frozen, const Goldens& fresh);

// Exact or counted complexity of x for the given flavor, as the CLI reports it.
double Complexity(const std::string& flavor, const std::string& x, unsigned t);

}  // namespace kolmoverify::golden

#endif  // KOLMOVERIFY_GOLDEN_HPP_
