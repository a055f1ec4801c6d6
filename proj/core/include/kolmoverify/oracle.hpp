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

#ifndef KOLMOVERIFY_ORACLE_HPP_
#define KOLMOVERIFY_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/samplers.hpp"

namespace kolmoverify::verify {

using samplers::SampleBatch;

enum class OracleTarget { kUKt, kQuKt, kProbability };
enum class Contract { kExact, kTwoSided, kOneSided };
// How a perturbed oracle resolves its in-contract error: uniformly at random,
// or always at the edge of the contract that favours acceptance (probability
// up, complexity up).
enum class ErrorProfile { kRandom, kSaturating };

std::string ToString(OracleTarget t);
std::string ToString(Contract c);

// Width, in bits, of a failed query's error: truth shifted by U[-w, w].
inline constexpr double kFailureSpreadBits = 8.0;

struct OracleSpec {
  OracleTarget target = OracleTarget::kUKt;
  Contract contract = Contract::kExact;
  ErrorProfile profile = ErrorProfile::kRandom;
  double delta = 0.0;  // failure probability per query
  std::uint64_t seed = 0;
  // uKt/quKt budget; 0 selects the unbounded-time limit (uKt only).
  unsigned t = 0;
  unsigned n = 1;
  // Probability target: answers Pr under sampler^{⊗s}.
  std::optional<samplers::DescribedSampler> sampler;
};

// M (complexity) or Approx (probability), with exact or perturbed backing.
class ComplexityOracle {
 public:
  const OracleSpec& spec() const { return spec_; }
  OracleTarget target() const { return spec_.target; }

  // Reported complexity, in bits, of the concatenated tuple.
  double Complexity(const SampleBatch& tuple, std::uint64_t nonce = 0) const;
  // Reported log2 probability of the tuple (-inf when zero).
  double Log2Probability(const SampleBatch& tuple, std::uint64_t nonce = 0) const;

  double TrueComplexity(const SampleBatch& tuple) const;
  double TrueLog2Probability(const SampleBatch& tuple) const;

  // Applies the contract's error to a true log-domain value. `sign` is +1
  // when larger values favour acceptance.
  double Perturb(double truth, int favourable_sign, std::uint64_t nonce) const;

  friend ComplexityOracle make_oracle(OracleSpec spec);

 private:
  ComplexityOracle() = default;
  OracleSpec spec_;
  std::shared_ptr<const std::vector<double>> log2p_by_code_;
};

// Throws UnsupportedSpec for combinations without a contract
// (one-sided complexity, unbounded quKt, probability without a sampler).
ComplexityOracle make_oracle(OracleSpec spec);

}  // namespace kolmoverify::verify

#endif  // KOLMOVERIFY_ORACLE_HPP_
