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
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/samplers.hpp"

namespace kolmoverify::samplers {
namespace {

const std::vector<DescribedSampler>& Corpus() {
  static const auto* corpus = new std::vector<DescribedSampler>(CorpusV1());
  return *corpus;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SamplersTest, PointMassTableAlwaysSamplesItsOutcome) {
  const auto d = DescribedSampler::ExplicitTable(
      "pm", ExplicitDistribution::PointMass(Outcome::Parse("101")), 3, 11);
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(sample(d, seed).ToString(), "101");
}

TEST(SamplersTest, UniformTableFrequencies) {
  const auto& d = FindSampler(Corpus(), "uniform1");
  Rng rng(7);
  int zeros = 0;
  for (int i = 0; i < 100000; ++i) zeros += d.Sample(rng).ToString() == "0";
  EXPECT_NEAR(zeros / 1e5, 0.5, 0.01);
}

TEST(SamplersTest, EmpiricalMatchesExactChiSquared) {
  for (const auto& d : Corpus()) {
    Rng rng(DeriveSeed(2026, d.description_length()));
    std::map<Outcome, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[d.Sample(rng)];
    const auto& exact = d.exact_distribution();
    for (const auto& [x, c] : counts) EXPECT_GT(exact.prob(x), 0) << d.label();
    if (exact.support_size() < 2) continue;
    double chi2 = 0;
    for (const auto& [x, p] : exact.entries()) {
      const double e = p * draws;
      chi2 += (counts[x] - e) * (counts[x] - e) / e;
    }
    const double df = exact.support_size() - 1.0;
    EXPECT_LE(chi2, df + 3 * std::sqrt(2 * df)) << d.label();
  }
}

TEST(SamplersTest, ExactDistributionsNormalize) {
  for (const auto& d : Corpus()) EXPECT_NEAR(d.exact_distribution().total_mass(), 1.0, 1e-12);
}

TEST(SamplersTest, DescriptionLengthIsProgramLength) {
  for (const auto& d : Corpus()) {
    if (d.kind() != SamplerKind::kExplicitTable) {
      EXPECT_EQ(d.description_length(), d.program().size()) << d.label();
    }
  }
}

TEST(SamplersTest, TemplateSemantics) {
  // Random EMIT then DBL: uniform over {00, 11}.
  const auto& rep = FindSampler(Corpus(), "repeat2");
  EXPECT_EQ(rep.randomness_bits(), 1u);
  EXPECT_EQ(rep.exact_distribution().exact_prob(Outcome::Parse("00")), Rational(1, 2));
  EXPECT_EQ(rep.exact_distribution().exact_prob(Outcome::Parse("11")), Rational(1, 2));
  // EMIT1 then random DBL-or-NOP, m=2: "11" or ⊥.
  const auto d = DescribedSampler::ClassicalVm("dbl", BitTape::FromString("0010" "1110" "0000"), 2);
  EXPECT_EQ(d.exact_distribution().exact_prob(Outcome::Parse("11")), Rational(1, 2));
  EXPECT_EQ(d.exact_distribution().exact_prob(Outcome::Bottom()), Rational(1, 2));
  EXPECT_EQ(d.RunWithRandomness(BitTape::FromString("1")).ToString(), "11");
}

TEST(SamplersTest, ClassicalCorpusMatchesPythonTemplateOracle) {
  EXPECT_EQ(FindSampler(Corpus(), "uniform8").exact_distribution().support_size(), 256u);
  EXPECT_EQ(FindSampler(Corpus(), "half2").exact_distribution().exact_prob(Outcome::Parse("01")),
            Rational(1, 2));
}

TEST(PrgStretchTest, IdentityExpanderReproducesBase) {
  const auto& base = FindSampler(Corpus(), "uniform4");
  const auto s = prg_stretch(base, base.randomness_bits(), Expander::kIdentity);
  EXPECT_EQ(s.exact_distribution(), base.exact_distribution());
}

TEST(PrgStretchTest, SeedTooLarge) {
  const auto& base = FindSampler(Corpus(), "uniform4");
  EXPECT_THROW(prg_stretch(base, 4), SeedTooLarge);
  EXPECT_THROW(prg_stretch(base, 5, Expander::kIdentity), SeedTooLarge);
  EXPECT_NO_THROW(prg_stretch(base, 3));
}

TEST(PrgStretchTest, OneSeedBitGivesAtMostTwoOutcomes) {
  for (const auto& base : Corpus()) {
    if (base.kind() != SamplerKind::kClassicalVm || base.randomness_bits() < 2) continue;
    const auto s = prg_stretch(base, 1);
    EXPECT_LE(s.exact_distribution().support_size(), 2u);
    EXPECT_LE(shannon_entropy(s.exact_distribution()), 1.0);
  }
}

// The bound rearranges |H - H*| <= Δ·m + 1/e, which is false near point
// masses; the zero-seed stretches of uniform1..3 are exactly the cases where
// it fails.
TEST(PrgStretchTest, EntropyAndDistinguishingBoundOnCorpus) {
  std::vector<std::string> violations;
  for (const auto& base : Corpus()) {
    if (base.kind() != SamplerKind::kClassicalVm) continue;
    const double h_base = shannon_entropy(base.exact_distribution());
    for (unsigned k = 0; k < base.randomness_bits(); ++k) {
      const auto s = prg_stretch(base, k);
      const double h = shannon_entropy(s.exact_distribution());
      EXPECT_LE(h, k + 1e-12) << base.label() << " seed " << k;
      if (h_base > k) {
        const double delta = tv_distance(base.exact_distribution(), s.exact_distribution());
        if (delta < (h_base - k - 1 / M_E) / base.m()) {
          violations.push_back(base.label() + "/" + std::to_string(k));
        }
      }
    }
  }
  EXPECT_EQ(violations, (std::vector<std::string>{"uniform1/0", "uniform2/0", "uniform3/0"}));
}

TEST(PrgStretchTest, Uniform8TwoSeedBits) {
  const auto& base = FindSampler(Corpus(), "uniform8");
  const auto s = prg_stretch(base, 2);
  EXPECT_LE(s.exact_distribution().support_size(), 4u);
  const double delta = tv_distance(base.exact_distribution(), s.exact_distribution());
  EXPECT_GE(delta, (8.0 - 2 - 1 / M_E) / 8);
  // Support of size 4 under a uniform base: Δ = 1 − |support|/256.
  EXPECT_NEAR(delta, 1.0 - s.exact_distribution().support_size() / 256.0, 1e-12);
}

TEST(PrgStretchTest, ExpanderIsDeterministic) {
  EXPECT_EQ(Expand(Expander::kXorshift, 3, 2, 16), Expand(Expander::kXorshift, 3, 2, 16));
  EXPECT_NE(Expand(Expander::kXorshift, 1, 2, 16), Expand(Expander::kXorshift, 2, 2, 16));
  EXPECT_EQ(Expand(Expander::kIdentity, 5, 4, 4).ToString(), "0101");
}

TEST(FarClosePairTest, FarButCollisionIndistinguishable) {
  const auto [a, b] = far_close_pair(6);
  EXPECT_EQ(tv_distance_exact(a.exact_distribution(), b.exact_distribution()), Rational(1));
  // Reference: uniform over m bits; both halves have twice its collision rate.
  const double acc_a = CollisionTesterAcceptance(a, a.exact_distribution(), 24, 2000, 11);
  const double acc_b = CollisionTesterAcceptance(b, a.exact_distribution(), 24, 2000, 11);
  EXPECT_LE(std::abs(acc_a - acc_b), 0.05);
}

TEST(ToyQasTest, BellPairAgainstEightBitTemplates) {
  const auto q = toy_qas({qsim::ParseCircuitText("q 2\nh 0\ncx 0 1\nend"), 8, "bell"});
  EXPECT_EQ(q.certificate, 0.0);  // random EMIT then DBL is a Bell sampler
}

TEST(ToyQasTest, H3of4Certificate) {
  const auto c = qsim::ParseCircuitText("q 4\nh 0\nh 1\nh 2\nend");
  EXPECT_DOUBLE_EQ(toy_qas({c, 12, "h3"}).certificate, 0.75);
  EXPECT_DOUBLE_EQ(toy_qas({c, 8, "h3"}).certificate, 1.0);
}

TEST(ToyQasTest, ClassicalCircuitHasZeroCertificate) {
  EXPECT_EQ(toy_qas({qsim::ParseCircuitText("q 1\nend"), 8, "zero"}).certificate, 0.0);
}

TEST(ToyQasTest, CertificateMonotoneInClassicalBudget) {
  const auto c = qsim::ParseCircuitText("q 2\nh 0\nh 1\nend");
  double prev = 2;
  for (unsigned t = 4; t <= 16; t += 2) {
    const double cert = toy_qas({c, t, "plus2"}).certificate;
    EXPECT_LE(cert, prev + 1e-15) << t;
    prev = cert;
  }
}

TEST(ToyQasTest, BudgetTooLarge) {
  EXPECT_THROW(toy_qas({qsim::ParseCircuitText("q 1\nend"), 25, "x"}), BudgetTooLarge);
}

TEST(TupleAdversaryTest, ArityAndElementLength) {
  Rng rng(5);
  const auto iid = TupleAdversary::Iid("iid", FindSampler(Corpus(), "skewed2"), 9);
  const auto rep = TupleAdversary::RepeatBlock("rep", FindSampler(Corpus(), "uniform3"), 7);
  for (const auto* a : {&iid, &rep}) {
    for (int i = 0; i < 20; ++i) {
      const auto t = a->Draw(rng);
      ASSERT_EQ(t.size(), a->arity());
      for (const auto& x : t) EXPECT_EQ(x.size(), a->m());
    }
  }
  const auto t = rep.Draw(rng);
  EXPECT_DOUBLE_EQ(rep.Log2Probability(t), -3.0);
  EXPECT_EQ(rep.Marginal(), FindSampler(Corpus(), "uniform3").exact_distribution());
}

TEST(TupleAdversaryTest, CorrelatedJointMarginal) {
  std::map<Tuple, Rational> j;
  j[{Outcome::Parse("0"), Outcome::Parse("1")}] = Rational(1, 2);
  j[{Outcome::Parse("1"), Outcome::Parse("1")}] = Rational(1, 2);
  const auto a = TupleAdversary::Correlated(
      "c", JointDistribution(2, FiniteDistribution<Tuple>::FromExact(j)));
  EXPECT_EQ(a.Marginal().exact_prob(Outcome::Parse("1")), Rational(3, 4));
  EXPECT_DOUBLE_EQ(a.Log2Probability({BitTape::FromString("1"), BitTape::FromString("1")}), -1.0);
}

TEST(CorpusTest, AtLeastTwelveSpanningKinds) {
  std::map<SamplerKind, int> kinds;
  for (const auto& d : Corpus()) ++kinds[d.kind()];
  EXPECT_GE(Corpus().size(), 12u);
  EXPECT_EQ(kinds.size(), 3u);
}

TEST(CorpusTest, FrozenFileMatchesBuiltIn) {
  const std::string path = std::string(KOLMOVERIFY_DATA_DIR) + "/corpus_v1.json";
  EXPECT_EQ(ReadFile(path), SerializeCorpus(Corpus()));
  const auto loaded = LoadCorpus(path);
  ASSERT_EQ(loaded.size(), Corpus().size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].label(), Corpus()[i].label());
    EXPECT_EQ(loaded[i].exact_distribution(), Corpus()[i].exact_distribution());
  }
}

}  // namespace
}  // namespace kolmoverify::samplers
