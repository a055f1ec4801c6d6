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

#include "kolmoverify/experiments.hpp"

#include <cmath>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/golden.hpp"

namespace kolmoverify::experiments {
namespace {

using samplers::FindSampler;

const std::vector<DescribedSampler>& Corpus() {
  static const auto* corpus = new std::vector<DescribedSampler>(samplers::CorpusV1());
  return *corpus;
}

const DescribedSampler& S(const std::string& label) { return FindSampler(Corpus(), label); }

const golden::Goldens& Frozen() {
  static const auto* g =
      new golden::Goldens(golden::Load(std::string(KOLMOVERIFY_DATA_DIR) + "/goldens.json"));
  return *g;
}

const ReportRow& Row(const ExperimentReport& r, const std::string& param) {
  for (const auto& row : r.rows) {
    if (row.param == param) return row;
  }
  throw std::out_of_range("no row " + param);
}

TEST(ReportTest, CsvHeaderAndQuoting) {
  ExperimentReport r;
  r.experiment_id = "x";
  r.rows.push_back({"a,b", 0.5, 1, true, std::nullopt, {}, ""});
  EXPECT_EQ(r.ToCsv(), "experiment,param,trial_stat,bound,pass\nx,\"a,b\",0.5,1,true\n");
  EXPECT_EQ(r.ToCsv(false), "x,\"a,b\",0.5,1,true\n");
}

TEST(ReportTest, JsonOmitsTimestampByDefault) {
  const auto r = RunExperiment("embedding", {}, 1);
  EXPECT_EQ(r.ToJson().find("timestamp"), std::string::npos);
  EXPECT_EQ(r.ToJson().find("runtime_ms"), std::string::npos);
  EXPECT_NE(r.ToJson(true).find("timestamp"), std::string::npos);
}

TEST(RegistryTest, IdsUniqueAndManifestListsAll) {
  std::set<std::string> ids;
  const std::string manifest = Manifest();
  for (const auto& e : Registry()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_TRUE(static_cast<bool>(e.run)) << e.id;
    EXPECT_NE(manifest.find("\"" + e.id + "\""), std::string::npos) << e.id;
  }
  EXPECT_GE(ids.size(), 12u);
}

TEST(RegistryTest, UnknownIdAndParameter) {
  EXPECT_THROW(RunExperiment("nosuch", {}, 1), UnsupportedSpec);
  EXPECT_THROW(RunExperiment("embedding", {{"bogus", "1"}}, 1), UnsupportedSpec);
  EXPECT_THROW(RunExperiment("embedding", {{"t", "x"}}, 1), UnsupportedSpec);
}

TEST(RegistryTest, ResolvedParametersAreRecorded) {
  const auto r = RunExperiment("fannes_prg", {{"pairs", "10"}}, 3);
  EXPECT_EQ(r.parameters.at("pairs"), "10");
  EXPECT_EQ(r.parameters.at("corpus"), "v1");
  EXPECT_EQ(r.seed, 3u);
}

TEST(ReproducibilityTest, IdenticalSeedsGiveIdenticalJson) {
  for (const auto& [id, params] : std::vector<std::pair<std::string, Params>>{
           {"incompressibility", {{"sampler", "uniform8"}, {"trials", "2000"}}},
           {"qas_gap", {{"trials", "500"}}},
           {"marginal_lemma", {}},
           {"far_close", {{"trials", "50"}}}}) {
    EXPECT_EQ(RunExperiment(id, params, 9).ToJson(), RunExperiment(id, params, 9).ToJson()) << id;
  }
}

TEST(NormalizationTest, SmallBudgets) {
  const auto r = exp_normalization(10, 1);
  EXPECT_TRUE(r.pass);
}

TEST(CodingTest, MatchesFrozenGoldens) {
  const auto c = exp_coding(Corpus(), kCodingT, false);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.observed.at("c_univ"), Frozen().c_univ);
  const auto q = exp_coding(Corpus(), kQuantumT, true);
  EXPECT_TRUE(q.pass);
  EXPECT_EQ(q.observed.at("c_q"), Frozen().c_q);
  EXPECT_EQ(exp_embedding(kEmbedT).observed.at("C_embed"), Frozen().c_embed);
}

TEST(CodingTest, PointMassSlackWithinTwiceDescription) {
  const auto c = exp_coding(Corpus(), kCodingT, false);
  const auto& row = Row(c, "point0");
  EXPECT_LE(row.trial_stat, c.observed.at("c_univ"));
  EXPECT_TRUE(std::isfinite(row.trial_stat));
}

TEST(IncompressibilityTest, UniformWithinBound) {
  const auto r = exp_incompressibility(S("uniform8"), {2, 4, 6}, 20000, 5, kCodingT);
  EXPECT_TRUE(r.pass);
}

TEST(IncompressibilityTest, PointMassLargeAlphaNeverHits) {
  const auto& p = S("point0");
  const double c = IncompressibilityConstant(kCodingT, p.m(), false);
  const auto r = exp_incompressibility(p, {p.m() + c + 1}, 1000, 5, kCodingT);
  EXPECT_EQ(r.rows[0].trial_stat, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(IncompressibilityTest, BellQuantumTwin) {
  EXPECT_TRUE(exp_incompressibility(S("q_bell"), {2, 4, 6}, 2000, 5, kQuantumT).pass);
}

TEST(StatisticsPathTest, WilsonShrinksWithFourTimesTrials) {
  const auto control = DescribedSampler::ClassicalVm(
      "abab", BitTape::FromString("111111110011"), 4);
  const auto a = exp_qas_gap(PinnedToyQas(), control, {}, 4000, 5);
  const auto b = exp_qas_gap(PinnedToyQas(), control, {}, 16000, 5);
  const auto& ra = Row(a, "toy_qas_h3:gap>=threshold");
  const auto& rb = Row(b, "toy_qas_h3:gap>=threshold");
  EXPECT_NEAR((rb.ci->hi - rb.ci->lo) / (ra.ci->hi - ra.ci->lo), 0.5, 0.05);
}

TEST(MarginalLemmaTest, FamilyShape) {
  const auto family = JointFamily(kDefaultSeed);
  EXPECT_GE(family.size(), 20u);
  for (const auto& jc : family) {
    EXPECT_LE(jc.joint.arity(), 4u) << jc.label;
    EXPECT_LE(jc.joint.dist().support_size(), 64u) << jc.label;
  }
}

TEST(MarginalLemmaTest, EveryLinkHolds) {
  const auto r = exp_marginal_lemma(JointFamily(kDefaultSeed), {0, 1, 2}, kChainT);
  EXPECT_TRUE(r.pass);
  for (const auto& row : r.rows) EXPECT_TRUE(row.pass) << row.param << " " << row.note;
  EXPECT_GT(r.observed.at("checked"), 0);
}

TEST(MarginalLemmaTest, HonestJointHasZeroDistance) {
  const auto r = exp_marginal_lemma(JointFamily(kDefaultSeed), {2}, kChainT);
  EXPECT_EQ(Row(r, "uniform1^3:honest:alpha=2").trial_stat, 0.0);
}

TEST(QasGapTest, ToyClearsThresholdControlDoesNot) {
  const auto control = DescribedSampler::ClassicalVm(
      "abab", BitTape::FromString("111111110011"), 4);
  const auto r = exp_qas_gap(PinnedToyQas(), control, {}, 4000, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(Row(r, "abab:control").trial_stat, 0.0);
  EXPECT_GT(r.observed.at("median_gap"), 0);
}

TEST(QasGapTest, BudgetTooLarge) {
  QasGapConfig cfg;
  cfg.t_classical = 30;
  EXPECT_THROW(exp_qas_gap(PinnedToyQas(), S("point0"), cfg, 10, 1), BudgetTooLarge);
}

TEST(QasVerifierTest, ReducedTrials) {
  QasVerifierConfig cfg;
  cfg.qas_trials = 100;
  cfg.classical_trials_per_sampler = 5;
  const auto r = exp_qas_verifier(PinnedToyQas(), cfg, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(Row(r, "classical_family:acceptance").trial_stat, 0.0);
}

TEST(FannesPrgTest, RandomPairsHoldAndStretchesViolateOnlyAtZeroSeed) {
  const auto r = exp_fannes_prg(Corpus(), 1000, kDefaultSeed);
  EXPECT_TRUE(Row(r, "fannes:random_pairs").pass);
  std::vector<std::string> failed;
  for (const auto& row : r.rows) {
    if (!row.pass) failed.push_back(row.param);
  }
  EXPECT_EQ(failed, (std::vector<std::string>{"uniform1:seed_bits=0:distance",
                                              "uniform2:seed_bits=0:distance",
                                              "uniform3:seed_bits=0:distance"}));
}

TEST(FarCloseTest, CollisionBlindButVerSeparates) {
  EXPECT_TRUE(exp_far_close(6, 200, 2).pass);
}

TEST(VerStarTest, ReducedTrials) {
  const auto r = exp_ver_star({S("uniform1")}, 4, 1, 0.5, 30, 6);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(Row(r, "uniform1:honest").trial_stat, 1.0);
}

TEST(VerificationCurvesTest, SmallGrid) {
  const auto r = exp_verification_curves({S("uniform1"), S("half2")}, {S("half2")}, {{4, 0.5}}, 1,
                                         {}, 100, 7);
  EXPECT_TRUE(r.pass);
  const auto& honest = Row(r, "n=4,eps=0.5:uniform1:honest");
  EXPECT_GE(honest.ci->hi, 0.75);
}

TEST(AdversaryCorpusTest, ContainsStretchRepeatAndNearThreshold) {
  const auto cfg = verify::VerConfig::Defaults(4, 1, 0.25);
  std::set<std::string> labels;
  for (const auto& a : AdversaryCorpus(S("uniform1"), cfg)) {
    labels.insert(a.label());
    EXPECT_EQ(a.arity(), cfg.s) << a.label();
  }
  EXPECT_TRUE(labels.count("iid:prg0:uniform1"));
  EXPECT_TRUE(labels.count("repeat:uniform1"));
  EXPECT_TRUE(labels.count("near_threshold(uniform1)"));
}

TEST(OneSidedRegressionTest, TwoSidedOracleAdmitsAnAdversary) {
  const auto r = exp_one_sided_regression({S("uniform1")}, {{8, 0.25}}, 1, 0.01, 200, 8);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.observed.at("violations"), 0);
}

}  // namespace
}  // namespace kolmoverify::experiments
