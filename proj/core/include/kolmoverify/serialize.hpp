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

#ifndef KOLMOVERIFY_SERIALIZE_HPP_
#define KOLMOVERIFY_SERIALIZE_HPP_

#include <string>

#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/qsim.hpp"
#include "kolmoverify/verify.hpp"

namespace kolmoverify {

// {"budget":{"n","t","m"},"mode","entries":[{"outcome","num","log2den"}]}.
// Float-backed probabilities are written as their exact dyadic value. "num"
// is a JSON integer when it fits in 64 bits and a decimal string otherwise.
std::string DistributionToJson(const ExplicitDistribution& dist, const bitvm::VmBudget& budget,
                               const std::string& mode);
std::string ToJson(const bitvm::UniversalDistribution& u);
std::string ToJson(const qsim::QuantumUniversalDistribution& u);
// Reads the entries back as an exact distribution.
ExplicitDistribution DistributionFromJson(const std::string& text, bitvm::VmBudget* budget);

// {"accepted","k","neg_log_p","alpha","blocks","gaps","seed","count"}.
// Infinite values are written as the strings "+inf" / "-inf".
std::string ToJson(const verify::Verdict& v);

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_SERIALIZE_HPP_
