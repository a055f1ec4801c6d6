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

#include "kolmoverify/oracle.hpp"

#include <cmath>
#include <limits>

#include "kolmoverify/errors.hpp"
#include "kolmoverify/qsim.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify::verify {

namespace {
constexpr double kInfD = std::numeric_limits<double>::infinity();
}  // namespace

std::string ToString(OracleTarget t) {
  switch (t) {
    case OracleTarget::kUKt:
      return "uKt";
    case OracleTarget::kQuKt:
      return "quKt";
    case OracleTarget::kProbability:
      return "probability";
  }
  return "?";
}

std::string ToString(Contract c) {
  switch (c) {
    case Contract::kExact:
      return "exact";
    case Contract::kTwoSided:
      return "two-sided";
    case Contract::kOneSided:
      return "one-sided";
  }
  return "?";
}

ComplexityOracle make_oracle(OracleSpec spec) {
  if (spec.delta < 0 || spec.delta > 1) throw UnsupportedSpec("delta outside [0, 1]");
  if (spec.target != OracleTarget::kProbability && spec.contract == Contract::kOneSided) {
    throw UnsupportedSpec("one-sided contracts apply to probability oracles only");
  }
  if (spec.target == OracleTarget::kQuKt && spec.t == 0) {
    throw UnsupportedSpec("quKt oracle needs a finite budget");
  }
  ComplexityOracle o;
  if (spec.target == OracleTarget::kProbability) {
    if (!spec.sampler) throw UnsupportedSpec("probability oracle needs a sampler");
    const unsigned m = spec.sampler->m();
    if (m > 20) throw UnsupportedSpec("probability oracle supports m <= 20");
    auto table = std::make_shared<std::vector<double>>(std::size_t{1} << m, -kInfD);
    for (const auto& [x, p] : spec.sampler->exact_distribution().entries()) {
      if (x.is_bottom()) continue;
      (*table)[x.value().ToInteger()] = std::log2(p);
    }
    o.log2p_by_code_ = std::move(table);
  }
  o.spec_ = std::move(spec);
  return o;
}

double ComplexityOracle::TrueComplexity(const SampleBatch& tuple) const {
  const BitTape x = tuple.Concatenated();
  switch (spec_.target) {
    case OracleTarget::kUKt:
      if (spec_.t == 0) return bitvm::uKt_unbounded(x);
      if (spec_.t <= bitvm::kTMax) {
        return bitvm::uKt(x, {spec_.n, spec_.t, static_cast<unsigned>(x.size())});
      }
      return bitvm::uKt_counted(x, spec_.t);
    case OracleTarget::kQuKt: {
      const bitvm::VmBudget b{spec_.n, spec_.t, static_cast<unsigned>(x.size())};
      return qsim::quKt(x, b, spec_.t <= qsim::kTMaxQ ? bitvm::Mode::Exact()
                                                       : bitvm::Mode::Counted());
    }
    case OracleTarget::kProbability:
      throw OracleMismatch("probability oracle asked for a complexity");
  }
  return kInfD;
}

double ComplexityOracle::TrueLog2Probability(const SampleBatch& tuple) const {
  if (spec_.target != OracleTarget::kProbability) {
    throw OracleMismatch("complexity oracle asked for a probability");
  }
  if (tuple.m != spec_.sampler->m()) return -kInfD;
  const auto& table = *log2p_by_code_;
  double total = 0;
  for (std::uint32_t c : tuple.codes) total += table[c];
  return total;
}

double ComplexityOracle::Perturb(double truth, int favourable_sign, std::uint64_t nonce) const {
  if (spec_.contract == Contract::kExact || std::isinf(truth)) return truth;
  Rng rng(DeriveSeed(spec_.seed, nonce));
  if (spec_.delta > 0 && rng.uniform() < spec_.delta) {
    return truth + rng.uniform(-kFailureSpreadBits, kFailureSpreadBits);
  }
  const bool saturate = spec_.profile == ErrorProfile::kSaturating;
  if (spec_.contract == Contract::kOneSided) {
    // 1/2·Pr <= Approx <= Pr.
    return truth + (saturate ? 0.0 : rng.uniform(-1.0, 0.0));
  }
  return truth + (saturate ? favourable_sign * 1.0 : rng.uniform(-1.0, 1.0));
}

double ComplexityOracle::Complexity(const SampleBatch& tuple, std::uint64_t nonce) const {
  return Perturb(TrueComplexity(tuple), +1, nonce);
}

double ComplexityOracle::Log2Probability(const SampleBatch& tuple, std::uint64_t nonce) const {
  return Perturb(TrueLog2Probability(tuple), +1, nonce);
}

}  // namespace kolmoverify::verify
