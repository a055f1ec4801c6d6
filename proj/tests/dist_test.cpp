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
#include <numbers>

#include "gtest/gtest.h"
#include "kolmoverify/dist.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify {
namespace {

Outcome O(const char* s) { return Outcome::Parse(s); }

ExplicitDistribution Exact(std::initializer_list<std::pair<const char*, Rational>> e) {
  std::map<Outcome, Rational> m;
  for (const auto& [k, v] : e) m[O(k)] = v;
  return ExplicitDistribution::FromExact(std::move(m));
}

// Random distribution over {0,1}^4 with probabilities in multiples of 1/256.
ExplicitDistribution RandomDyadic(Rng& rng) {
  std::map<Outcome, Rational> m;
  int left = 256;
  const int support = 1 + static_cast<int>(rng.below(16));
  for (int i = 0; i < support && left > 0; ++i) {
    int w = i + 1 == support ? left : static_cast<int>(rng.below(static_cast<std::uint64_t>(left) + 1));
    m[Outcome(BitTape::FromInteger(rng.below(16), 4))] += Rational(w, 256);
    left -= w;
  }
  if (left > 0) m[Outcome(BitTape::FromInteger(0, 4))] += Rational(left, 256);
  return ExplicitDistribution::FromExact(std::move(m));
}

const Rational kHalf(1, 2);

TEST(DistributionTest, RejectsUnnormalized) {
  EXPECT_THROW(Exact({{"0", Rational(1, 3)}}), std::invalid_argument);
  EXPECT_THROW(ExplicitDistribution::FromFloat({{O("0"), 0.5}}), std::invalid_argument);
  EXPECT_THROW(Exact({{"0", Rational(-1)}, {"1", Rational(2)}}), std::invalid_argument);
}

TEST(DistributionTest, ZeroEntriesAreDropped) {
  auto d = Exact({{"0", Rational(1)}, {"1", Rational(0)}});
  EXPECT_EQ(d.support_size(), 1u);
}

TEST(TvDistanceTest, Examples) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  auto p0 = ExplicitDistribution::PointMass(O("0"));
  auto p1 = ExplicitDistribution::PointMass(O("1"));
  EXPECT_EQ(tv_distance(u, u), 0.0);
  EXPECT_EQ(tv_distance(p0, p1), 1.0);
  EXPECT_EQ(tv_distance(u, p0), 0.5);
  EXPECT_EQ(tv_distance_exact(u, p0), kHalf);
}

TEST(TvDistanceTest, SymmetricOnRandomPairs) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto p = RandomDyadic(rng), q = RandomDyadic(rng);
    EXPECT_EQ(tv_distance_exact(p, q), tv_distance_exact(q, p));
    EXPECT_GE(tv_distance(p, q), 0.0);
    EXPECT_LE(tv_distance(p, q), 1.0);
  }
}

TEST(EntropyTest, Examples) {
  EXPECT_EQ(shannon_entropy(ExplicitDistribution::PointMass(O("0"))), 0.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(Exact({{"00", Rational(1, 4)}, {"01", Rational(1, 4)},
                                          {"10", Rational(1, 4)}, {"11", Rational(1, 4)}})),
                   2.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(Exact({{"0", kHalf}, {"10", Rational(1, 4)}, {"11", Rational(1, 4)}})),
                   1.5);
}

TEST(KlTest, Examples) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  auto q = Exact({{"0", Rational(3, 4)}, {"1", Rational(1, 4)}});
  EXPECT_EQ(kl_divergence(u, u), 0.0);
  EXPECT_NEAR(kl_divergence(u, q), 0.20751874963942185, 1e-15);
  EXPECT_EQ(kl_divergence(ExplicitDistribution::PointMass(O("1")),
                          ExplicitDistribution::PointMass(O("0"))),
            kInf);
}

TEST(KlTest, PinskerOnRandomPairs) {
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    auto p = RandomDyadic(rng), q = RandomDyadic(rng);
    double tv = tv_distance(p, q);
    EXPECT_LE(0.5 * tv * tv, kl_divergence(p, q));
  }
}

TEST(ProductPowerTest, Examples) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  auto j1 = product_power(u, 1);
  EXPECT_EQ(j1.arity(), 1u);
  EXPECT_EQ(marginal(j1, 0), u);
  auto j2 = product_power(u, 2);
  EXPECT_EQ(j2.dist().support_size(), 4u);
  EXPECT_EQ(j2.dist().exact_prob({O("1"), O("0")}), Rational(1, 4));
  auto pm = product_power(ExplicitDistribution::PointMass(O("01")), 3);
  EXPECT_EQ(pm.dist().exact_prob({O("01"), O("01"), O("01")}), 1);
}

TEST(ProductPowerTest, ExpansionCap) {
  std::map<Outcome, Rational> m;
  for (int i = 0; i < 64; ++i) m[Outcome(BitTape::FromInteger(i, 6))] = Rational(1, 64);
  auto d = ExplicitDistribution::FromExact(m);
  EXPECT_NO_THROW(product_power(d, 3));
  EXPECT_THROW(product_power(d, 4), ExpansionTooLarge);
}

TEST(MarginalMixtureTest, Examples) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto p = RandomDyadic(rng);
    EXPECT_EQ(marginal_mixture(product_power(p, 2)), p);
  }
  JointDistribution pair(2, FiniteDistribution<Tuple>::PointMass({O("0"), O("1")}));
  EXPECT_EQ(marginal_mixture(pair), Exact({{"0", kHalf}, {"1", kHalf}}));
  JointDistribution single(1, FiniteDistribution<Tuple>::PointMass({O("11")}));
  EXPECT_EQ(marginal_mixture(single), ExplicitDistribution::PointMass(O("11")));
}

TEST(ConditionOnTest, Examples) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  auto j = product_power(u, 2);
  EXPECT_EQ(condition_on(j, [](const Tuple&) { return true; }).dist(), j.dist());
  auto only = condition_on(j, [](const Tuple& t) { return t[0] == O("0") && t[1] == O("0"); });
  EXPECT_EQ(only.dist().exact_prob({O("0"), O("0")}), 1);
  EXPECT_THROW(condition_on(j, [](const Tuple&) { return false; }), ZeroMassEvent);
}

TEST(ConditionOnTest, BayesFactor) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto j = product_power(RandomDyadic(rng), 2);
    auto pred = [](const Tuple& t) { return t[0] <= t[1]; };
    Rational eps = 0;
    for (const auto& [t, v] : j.dist().exact_entries()) {
      if (!pred(t)) eps += v;
    }
    auto c = condition_on(j, pred);
    for (const auto& [t, v] : c.dist().exact_entries()) {
      EXPECT_LE(v, j.dist().exact_prob(t) / (1 - eps));
    }
  }
}

TEST(FannesTest, Examples) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  auto g = fannes_gap(u, u, 2);
  EXPECT_EQ(g.lhs, 0.0);
  EXPECT_DOUBLE_EQ(g.rhs, 1.0 / std::numbers::e);
  auto h = fannes_gap(ExplicitDistribution::PointMass(O("0000")),
                      ExplicitDistribution::PointMass(O("1111")), 16);
  EXPECT_EQ(h.lhs, 0.0);
  EXPECT_DOUBLE_EQ(h.rhs, 4.0 + 1.0 / std::numbers::e);
}

TEST(FannesTest, RandomDyadicPairs) {
  Rng rng(2026);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    auto g = fannes_gap(RandomDyadic(rng), RandomDyadic(rng), 16);
    if (g.lhs > g.rhs) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

// The "+1/e" form is not a theorem for every pair: a point mass against a
// slightly smeared copy of itself exceeds it. The tight bound carries the
// binary entropy h(Δ) instead of 1/e.
TEST(FannesTest, NearPointMassCounterexample) {
  std::map<Outcome, Rational> smeared{{O("0000"), Rational(9, 10)}};
  for (int i = 1; i < 16; ++i) smeared[Outcome(BitTape::FromInteger(i, 4))] = Rational(1, 150);
  auto g = fannes_gap(ExplicitDistribution::PointMass(O("0000")),
                      ExplicitDistribution::FromExact(smeared), 16);
  EXPECT_GT(g.lhs, g.rhs);
  const double d = 0.1;
  const double tight = d * std::log2(15.0) - d * std::log2(d) - (1 - d) * std::log2(1 - d);
  EXPECT_NEAR(g.lhs, tight, 1e-12);
}

TEST(MarginalLemmaBoundTest, Examples) {
  EXPECT_EQ(marginal_lemma_bound(0, 0, 17, 0), 0.0);
  EXPECT_DOUBLE_EQ(marginal_lemma_bound(0, 1, 100, 0), 0.1);
  // Second evaluation path: natural logs and long double.
  long double inner = std::log(1.0L / 0.9L) / std::log(2.0L) + 6.0L;
  double ref = static_cast<double>(0.1L + std::sqrt(inner / 600.0L));
  EXPECT_NEAR(marginal_lemma_bound(0.1, 4, 600, 2), ref, 1e-15);
  EXPECT_NEAR(marginal_lemma_bound(0.1, 4, 600, 2), 0.20125876993660888, 1e-15);
  EXPECT_THROW(marginal_lemma_bound(1.0, 0, 1, 0), std::invalid_argument);
}

TEST(JensenTest, SumOfSquaresBound) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::size_t s = 1 + rng.below(8);
    double sum = 0, sq = 0;
    for (std::size_t j = 0; j < s; ++j) {
      double d = rng.uniform();
      sum += d;
      sq += d * d;
    }
    EXPECT_LE(sum, std::sqrt(static_cast<double>(s) * sq) + 1e-12);
  }
}

TEST(CsvTest, Format) {
  auto u = Exact({{"0", kHalf}, {"1", kHalf}});
  EXPECT_EQ(ToCsv(u), "outcome,probability\n0,0.5\n1,0.5\n");
}

}  // namespace
}  // namespace kolmoverify
