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

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/serialize.hpp"
#include "kolmoverify/stats.hpp"
#include "kolmoverify/verify.hpp"

namespace kolmoverify::verify {
namespace {

using samplers::CorpusV1;
using samplers::DescribedSampler;
using samplers::FindSampler;

const std::vector<DescribedSampler>& Corpus() {
  static const auto* corpus = new std::vector<DescribedSampler>(CorpusV1());
  return *corpus;
}

ComplexityOracle ExactM(unsigned t = 0) {
  OracleSpec spec;
  spec.target = OracleTarget::kUKt;
  spec.t = t;
  return make_oracle(spec);
}

ComplexityOracle Approx(const DescribedSampler& target, Contract contract = Contract::kExact,
                        double delta = 0, std::uint64_t seed = 1,
                        ErrorProfile profile = ErrorProfile::kRandom) {
  OracleSpec spec;
  spec.target = OracleTarget::kProbability;
  spec.contract = contract;
  spec.delta = delta;
  spec.seed = seed;
  spec.profile = profile;
  spec.sampler = target;
  return make_oracle(spec);
}

SampleBatch Repeat(const std::string& x, std::size_t count) {
  return SampleBatch::FromTapes(std::vector<BitTape>(count, BitTape::FromString(x)));
}

TEST(OracleTest, ExactUktMatchesJointUkt) {
  const auto M = ExactM(12);
  Rng rng(3);
  for (int q = 0; q < 100; ++q) {
    const std::size_t arity = 1 + rng.below(3);
    std::vector<BitTape> tuple;
    for (std::size_t i = 0; i < arity; ++i) tuple.push_back(BitTape::FromInteger(rng.below(2), 1));
    const double want = bitvm::joint_uKt(tuple, {1, 12, static_cast<unsigned>(arity)});
    EXPECT_EQ(M.Complexity(SampleBatch::FromTapes(tuple)), want);
  }
}

TEST(OracleTest, UnboundedOracleMatchesCountedLimit) {
  const auto M = ExactM();
  const auto x = Repeat("01", 3);
  EXPECT_NEAR(M.Complexity(x), bitvm::uKt_counted(x.Concatenated(), 2400), 1e-9);
}

TEST(OracleTest, OneSidedNeverOverestimates) {
  const auto& target = FindSampler(Corpus(), "skewed2");
  const auto a = Approx(target, Contract::kOneSided, 0.0, 9);
  Rng rng(4);
  for (std::uint64_t q = 0; q < 10000; ++q) {
    const SampleBatch t = target.SampleBatchOf(1 + rng.below(4), rng);
    const double truth = a.TrueLog2Probability(t);
    const double got = a.Log2Probability(t, q);
    EXPECT_LE(got, truth);
    EXPECT_GE(got, truth - 1);
  }
}

TEST(OracleTest, TwoSidedWithinOneBitAtRateOneMinusDelta) {
  const auto& target = FindSampler(Corpus(), "skewed2");
  const auto a = Approx(target, Contract::kTwoSided, 0.1, 10);
  Rng rng(5);
  int within = 0;
  for (std::uint64_t q = 0; q < 10000; ++q) {
    const SampleBatch t = target.SampleBatchOf(3, rng);
    within += std::abs(a.Log2Probability(t, q) - a.TrueLog2Probability(t)) <= 1;
  }
  EXPECT_GE(within, 8800);
}

TEST(OracleTest, SaturatingTwoSidedOverestimatesByOneBit) {
  const auto& target = FindSampler(Corpus(), "uniform1");
  const auto a = Approx(target, Contract::kTwoSided, 0.0, 1, ErrorProfile::kSaturating);
  EXPECT_DOUBLE_EQ(a.Log2Probability(Repeat("0", 10)), -9.0);
}

TEST(OracleTest, PerQueryNoncesAreReproducible) {
  const auto& target = FindSampler(Corpus(), "uniform2");
  const auto a = Approx(target, Contract::kTwoSided, 0.5, 77);
  const auto t = Repeat("01", 4);
  EXPECT_EQ(a.Log2Probability(t, 5), a.Log2Probability(t, 5));
  EXPECT_NE(a.Log2Probability(t, 5), a.Log2Probability(t, 6));
}

TEST(OracleTest, UnsupportedSpecs) {
  OracleSpec spec;
  spec.contract = Contract::kOneSided;
  EXPECT_THROW(make_oracle(spec), UnsupportedSpec);
  spec = {};
  spec.target = OracleTarget::kProbability;
  EXPECT_THROW(make_oracle(spec), UnsupportedSpec);
  spec = {};
  spec.target = OracleTarget::kQuKt;
  EXPECT_THROW(make_oracle(spec), UnsupportedSpec);
}

TEST(VerConfigTest, Defaults) {
  const auto cfg = VerConfig::Defaults(4, 1, 0.25);
  EXPECT_EQ(cfg.alpha, 4);
  // 256·(log2(4/3) + 8) = 2154.25...
  EXPECT_EQ(cfg.s, 2155u);
  EXPECT_FALSE(cfg.scaled);
  const auto big = VerConfig::Defaults(8, 1, 0.25);
  EXPECT_EQ(big.alpha, 9);
  EXPECT_EQ(big.s, kDeskSCap);
  EXPECT_TRUE(big.scaled);
  const auto star = VerStarConfig::Defaults(4, 1, 0.5);
  EXPECT_EQ(star.blocks, 256u);
  EXPECT_EQ(star.inner.s, 256u);
  EXPECT_TRUE(star.scaled);
}

TEST(VerTest, PointMassTargetAccepts) {
  const auto& target = FindSampler(Corpus(), "point01");
  VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  const auto v = ver(Repeat("01", cfg.s), target, cfg, ExactM(), Approx(target));
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.neg_log_p, 0.0);
}

TEST(VerTest, ZeroProbabilityRejects) {
  const auto& target = FindSampler(Corpus(), "half2");
  VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  auto samples = Repeat("01", cfg.s);
  samples.codes[17] = 0b11;
  const auto v = ver(samples, target, cfg, ExactM(), Approx(target));
  EXPECT_FALSE(v.accepted);
  EXPECT_TRUE(std::isinf(v.neg_log_p));
}

TEST(VerTest, VerdictFollowsInequality) {
  const auto& target = FindSampler(Corpus(), "uniform1");
  VerConfig cfg = VerConfig::Defaults(4, 1, 0.5);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto samples = (i % 2 ? target : FindSampler(Corpus(), "point0")).SampleBatchOf(cfg.s, rng);
    const auto v = ver(samples, target, cfg, ExactM(), Approx(target, Contract::kOneSided, 0.1, i));
    EXPECT_EQ(v.accepted, v.neg_log_p <= v.k + v.alpha);
  }
}

TEST(VerTest, HonestUniformAcceptance) {
  const auto& target = FindSampler(Corpus(), "uniform1");
  const VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  const auto M = ExactM();
  const auto A = Approx(target);
  std::size_t accepted = 0;
  const std::size_t trials = 2000;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(DeriveSeed(100, i));
    accepted += ver(target.SampleBatchOf(cfg.s, rng), target, cfg, M, A).accepted;
  }
  EXPECT_GE(Wilson(accepted, trials).hi, 1 - cfg.soundness());
}

TEST(VerTest, ErrorsOnArityAndOracleMismatch) {
  const auto& target = FindSampler(Corpus(), "uniform1");
  const VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  EXPECT_THROW(ver(Repeat("0", cfg.s - 1), target, cfg, ExactM(), Approx(target)), WrongArity);
  EXPECT_THROW(ver(Repeat("00", cfg.s), target, cfg, ExactM(), Approx(target)), WrongArity);
  EXPECT_THROW(ver(Repeat("0", cfg.s), target, cfg, Approx(target), Approx(target)),
               OracleMismatch);
}

TEST(VerStarTest, AllBlocksAcceptOrReject) {
  const auto& target = FindSampler(Corpus(), "point0");
  const auto cfg = VerStarConfig::Defaults(4, 1, 0.5);
  const auto yes = ver_star(Repeat("0", cfg.total_samples()), target, cfg, ExactM(), Approx(target));
  EXPECT_TRUE(yes.accepted);
  EXPECT_EQ(yes.count, cfg.blocks);
  const auto no = ver_star(Repeat("1", cfg.total_samples()), target, cfg, ExactM(), Approx(target));
  EXPECT_FALSE(no.accepted);
  EXPECT_EQ(no.count, 0u);
  EXPECT_THROW(ver_star(Repeat("0", 5), target, cfg, ExactM(), Approx(target)), WrongArity);
}

ComplexityOracle QuantumM(unsigned t) {
  OracleSpec spec;
  spec.target = OracleTarget::kQuKt;
  spec.t = t;
  return make_oracle(spec);
}

TEST(QasVerifyTest, UnreachableStringsAccept) {
  const std::vector<BitTape> samples(16, BitTape::FromString("0010"));
  const auto v = qas_verify(samples, 16, ExactM(12), QuantumM(80), 1.0);
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.count, 16u);
}

TEST(QasVerifyTest, ClassicallyReachableStringsReject) {
  const std::vector<BitTape> samples(16, BitTape::FromString("0000"));
  const auto v = qas_verify(samples, 16, ExactM(12), QuantumM(80), 1.0);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.count, 0u);
}

TEST(QasVerifyTest, GapRule) {
  EXPECT_TRUE(QasGapHolds(20, 8, 16, 1));
  EXPECT_FALSE(QasGapHolds(19.9, 8, 16, 1));
  EXPECT_TRUE(QasGapHolds(INFINITY, 30, 16, 1));
  EXPECT_FALSE(QasGapHolds(INFINITY, INFINITY, 16, 1));
  EXPECT_FALSE(QasGapHolds(3, INFINITY, 16, 1));
  EXPECT_THROW(qas_verify({BitTape::FromString("0")}, 2, ExactM(12), QuantumM(80), 1), WrongArity);
}

TEST(VerdictTest, JsonIsReproducible) {
  const auto& target = FindSampler(Corpus(), "uniform1");
  const VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  auto run = [&] {
    Rng rng(42);
    return ToJson(ver(target.SampleBatchOf(cfg.s, rng), target, cfg, ExactM(),
                      Approx(target, Contract::kOneSided, 0.2, 42), 7));
  };
  EXPECT_EQ(run(), run());
  EXPECT_NE(run().find("\"accepted\":"), std::string::npos);
}

}  // namespace
}  // namespace kolmoverify::verify
