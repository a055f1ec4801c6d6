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

#ifndef KOLMOVERIFY_EXPERIMENTS_HPP_
#define KOLMOVERIFY_EXPERIMENTS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kolmoverify/dist.hpp"
#include "kolmoverify/samplers.hpp"
#include "kolmoverify/stats.hpp"
#include "kolmoverify/verify.hpp"

namespace kolmoverify::experiments {

using samplers::DescribedSampler;
using samplers::TupleAdversary;

// Pinned desk budgets.
inline constexpr unsigned kCodingT = 20;      // classical coding/incompressibility
inline constexpr unsigned kQuantumT = 80;     // quantum corpus (Counted engine)
inline constexpr unsigned kChainT = 40;       // marginal-lemma joints (Counted)
inline constexpr unsigned kQasClassicalT = 12;
inline constexpr unsigned kEmbedT = 16;
inline constexpr std::uint64_t kDefaultSeed = 2026;

struct ReportRow {
  std::string param;
  double trial_stat = 0;
  double bound = 0;
  bool pass = true;
  std::optional<Interval> ci;
  std::map<std::string, double> extra;
  std::string note;
};

struct ExperimentReport {
  std::string experiment_id;
  std::map<std::string, std::string> parameters;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  std::map<std::string, double> observed;  // experiment-level statistics
  bool pass = false;
  double runtime_ms = 0;

  // All rows pass.
  bool RecomputePass() const;
  // runtime_ms and the timestamp are omitted unless `with_timestamp`.
  std::string ToJson(bool with_timestamp = false) const;
  // experiment,param,trial_stat,bound,pass
  std::string ToCsv(bool header = true) const;
};

// Complexity lookups at a budget, choosing Exact enumeration when the budget
// allows it and the Counted engine otherwise.
double ClassicalComplexity(const BitTape& x, unsigned t);
double QuantumComplexity(const BitTape& x, unsigned t);
// max over m-bit x with finite complexity of (complexity(x) - m), floored at 0.
double IncompressibilityConstant(unsigned t, unsigned m, bool quantum);

// Coding theorem: per sampler max_x [K(x) + log2 p(x) - 2|D|]; observed["c"]
// is the corpus-wide max. Classical uses samplers whose own budget fits in T.
ExperimentReport exp_coding(const std::vector<DescribedSampler>& corpus, unsigned T,
                            bool quantum = false);

// Pr[K(x) <= -log2 p(x) - alpha] vs (m + c)·2^(1 - alpha).
ExperimentReport exp_incompressibility(const DescribedSampler& sampler,
                                       const std::vector<double>& alphas, std::uint64_t trials,
                                       std::uint64_t seed, unsigned T);

struct JointCase {
  std::string label;
  DescribedSampler target;
  JointDistribution joint;
};
// At least 20 exact joints (arity <= 4, support <= 64) over small targets.
std::vector<JointCase> JointFamily(std::uint64_t seed);

// Appendix chain per joint and alpha: Bayes factor, KL bound, chain rule,
// Pinsker, Jensen, triangle, and the final bound.
ExperimentReport exp_marginal_lemma(const std::vector<JointCase>& family,
                                    const std::vector<double>& alphas, unsigned T);

struct QasGapConfig {
  unsigned n = 4;
  double c = 1;
  unsigned t_classical = kQasClassicalT;
  unsigned t_quantum = kQuantumT;
};
ExperimentReport exp_qas_gap(const samplers::ToyQas& toy, const DescribedSampler& control,
                             const QasGapConfig& cfg, std::uint64_t trials, std::uint64_t seed);

struct OracleChoice {
  verify::Contract contract = verify::Contract::kOneSided;
  verify::ErrorProfile profile = verify::ErrorProfile::kRandom;
  double delta = 0.01;
};

struct GridPoint {
  unsigned n;
  double eps;
};

// Adversaries fielded against `target` at tuple arity s.
std::vector<TupleAdversary> AdversaryCorpus(const DescribedSampler& target,
                                            const verify::VerConfig& cfg);

// Acceptance-rate matrix. Honest rows need Wilson-hi >= 1 - n^-c; adversary
// rows with Δ >= eps need Wilson-lo <= (1 - eps) + n^-c. `adversary_targets`
// get adversary rows, `honest_targets` get an honest row each.
ExperimentReport exp_verification_curves(const std::vector<DescribedSampler>& honest_targets,
                                         const std::vector<DescribedSampler>& adversary_targets,
                                         const std::vector<GridPoint>& grid, double c,
                                         const OracleChoice& oracle, std::uint64_t trials,
                                         std::uint64_t seed);

// Same grid with a two-sided Approx of equal delta that resolves its slack
// upward; passes iff at least one adversary with Δ >= eps exceeds the bound.
ExperimentReport exp_one_sided_regression(const std::vector<DescribedSampler>& targets,
                                          const std::vector<GridPoint>& grid, double c,
                                          double delta, std::uint64_t trials,
                                          std::uint64_t seed);

ExperimentReport exp_ver_star(const std::vector<DescribedSampler>& targets, unsigned n, double c,
                              double eps, std::uint64_t trials, std::uint64_t seed);

// Subprobability and normalization of every universal distribution with t <= t_max.
ExperimentReport exp_normalization(unsigned t_max, std::uint64_t seed);

// Fannes on random pairs plus entropy/distance checks for every stretch of
// every randomness-explicit corpus sampler.
ExperimentReport exp_fannes_prg(const std::vector<DescribedSampler>& corpus, std::uint64_t pairs,
                                std::uint64_t seed);

struct QasVerifierConfig {
  unsigned n = 16;
  double c = 1;
  unsigned t_classical = kQasClassicalT;
  unsigned t_quantum = kQuantumT;
  std::uint64_t qas_trials = 500;
  std::uint64_t classical_trials_per_sampler = 20;
};
ExperimentReport exp_qas_verifier(const samplers::ToyQas& toy, const QasVerifierConfig& cfg,
                                  std::uint64_t seed);

// Collision tester vs Ver on the far/close pair.
ExperimentReport exp_far_close(unsigned n_scale, std::uint64_t trials, std::uint64_t seed);

// C_embed = max over gate-free outputs x in {0, 00} of quK^t(x) - uK^t(x).
ExperimentReport exp_embedding(unsigned t);

// The pinned toy QAS (H on qubits 0..2 of 4).
const samplers::ToyQas& PinnedToyQas();

// Registry --------------------------------------------------------------------

using Params = std::map<std::string, std::string>;

struct ExperimentInfo {
  std::string id;
  std::string statement;  // the inequality exercised
  Params defaults;
  std::function<ExperimentReport(const Params&, std::uint64_t seed)> run;
};

const std::vector<ExperimentInfo>& Registry();
// Merges `overrides` over the defaults; throws std::invalid_argument for
// unknown ids or parameters.
ExperimentReport RunExperiment(const std::string& id, const Params& overrides,
                               std::uint64_t seed);
// JSON list of ids with parameter defaults.
std::string Manifest();

}  // namespace kolmoverify::experiments

#endif  // KOLMOVERIFY_EXPERIMENTS_HPP_
