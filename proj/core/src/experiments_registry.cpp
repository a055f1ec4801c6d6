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

#include <chrono>
#include <set>
#include <sstream>

#include "experiments_internal.hpp"
#include "json.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/experiments.hpp"

namespace kolmoverify::experiments {

using nlohmann::json;

namespace {

const std::string& Get(const Params& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw UnsupportedSpec("missing parameter '" + key + "'");
  return it->second;
}

std::uint64_t GetU(const Params& p, const std::string& key) {
  const std::string& v = Get(p, key);
  std::size_t used = 0;
  unsigned long long out = 0;
  try {
    out = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-') {
    throw UnsupportedSpec("parameter '" + key + "' is not a non-negative integer: " + v);
  }
  return out;
}

double ParseDouble(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) {
    throw UnsupportedSpec("parameter '" + key + "' is not a number: " + v);
  }
  return out;
}

double GetD(const Params& p, const std::string& key) { return ParseDouble(key, Get(p, key)); }

std::vector<std::string> GetList(const Params& p, const std::string& key) {
  std::vector<std::string> out;
  std::stringstream ss(Get(p, key));
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UnsupportedSpec("parameter '" + key + "' is empty");
  return out;
}

std::vector<double> GetDoubles(const Params& p, const std::string& key) {
  std::vector<double> out;
  for (const auto& s : GetList(p, key)) out.push_back(ParseDouble(key, s));
  return out;
}

std::vector<DescribedSampler> CorpusFrom(const Params& p) {
  const std::string& c = Get(p, "corpus");
  return c == "v1" ? samplers::CorpusV1() : samplers::LoadCorpus(c);
}

std::vector<DescribedSampler> Pick(const std::vector<DescribedSampler>& corpus,
                                   const std::vector<std::string>& labels) {
  std::vector<DescribedSampler> out;
  for (const auto& l : labels) out.push_back(samplers::FindSampler(corpus, l));
  return out;
}

std::vector<GridPoint> Grid(const Params& p) {
  std::vector<GridPoint> out;
  for (double n : GetDoubles(p, "n")) {
    for (double e : GetDoubles(p, "eps")) out.push_back({static_cast<unsigned>(n), e});
  }
  return out;
}

verify::Contract ParseContract(const std::string& s) {
  if (s == "exact") return verify::Contract::kExact;
  if (s == "one-sided") return verify::Contract::kOneSided;
  if (s == "two-sided") return verify::Contract::kTwoSided;
  throw UnsupportedSpec("unknown contract: " + s);
}

verify::ErrorProfile ParseProfile(const std::string& s) {
  if (s == "random") return verify::ErrorProfile::kRandom;
  if (s == "saturating") return verify::ErrorProfile::kSaturating;
  throw UnsupportedSpec("unknown error profile: " + s);
}

// Runs one report per sampler and merges them under a single id.
ExperimentReport Incompressibility(const Params& p, std::uint64_t seed) {
  const auto corpus = CorpusFrom(p);
  const std::string& which = Get(p, "sampler");
  const std::vector<DescribedSampler> targets =
      which == "all" ? corpus : Pick(corpus, GetList(p, "sampler"));
  const auto alphas = GetDoubles(p, "alpha");
  ExperimentReport merged;
  merged.experiment_id = "incompressibility";
  merged.seed = seed;
  for (const auto& s : targets) {
    const bool quantum = s.kind() == samplers::SamplerKind::kQuantumCircuit;
    const unsigned T = static_cast<unsigned>(GetU(p, quantum ? "T_quantum" : "T"));
    const std::uint64_t trials = GetU(p, quantum ? "trials_quantum" : "trials");
    auto r = exp_incompressibility(s, alphas, trials, DeriveSeed(seed, merged.rows.size()), T);
    merged.trials = std::max(merged.trials, r.trials);
    merged.observed["c:" + s.label()] = r.observed["c"];
    for (auto& row : r.rows) merged.rows.push_back(std::move(row));
  }
  merged.pass = merged.RecomputePass();
  return merged;
}

std::vector<ExperimentInfo> BuildRegistry() {
  std::vector<ExperimentInfo> reg;
  reg.push_back({"normalization", "sum_x 2^-uK^t(x) <= 1, sum_x 2^-quK^t(x) <= 1; exact total == 1",
                 {{"t_max", "20"}},
                 [](const Params& p, std::uint64_t seed) {
                   return exp_normalization(static_cast<unsigned>(GetU(p, "t_max")), seed);
                 }});
  reg.push_back({"coding", "uK^T(x) <= -log2 p(x) + 2|D| + c_univ",
                 {{"T", std::to_string(kCodingT)}, {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t) {
                   return exp_coding(CorpusFrom(p), static_cast<unsigned>(GetU(p, "T")), false);
                 }});
  reg.push_back({"coding_quantum", "quK^T(x) <= -log2 p(x) + 2|D| + c_q",
                 {{"T", std::to_string(kQuantumT)}, {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t) {
                   return exp_coding(CorpusFrom(p), static_cast<unsigned>(GetU(p, "T")), true);
                 }});
  reg.push_back({"incompressibility", "Pr[uK^t(x) <= -log2 p(x) - alpha] <= (m+c)·2^(1-alpha)",
                 {{"sampler", "all"},
                  {"alpha", "2,4,6"},
                  {"trials", "100000"},
                  {"trials_quantum", "10000"},
                  {"T", std::to_string(kCodingT)},
                  {"T_quantum", std::to_string(kQuantumT)},
                  {"corpus", "v1"}},
                 Incompressibility});
  reg.push_back({"marginal_lemma",
                 "Delta(D, Marginal_G) <= eps + sqrt((log2(1/(1-eps)) + alpha + C_G)/s)",
                 {{"alpha", "0,1,2"}, {"T", std::to_string(kChainT)}},
                 [](const Params& p, std::uint64_t seed) {
                   auto r = exp_marginal_lemma(JointFamily(seed), GetDoubles(p, "alpha"),
                                               static_cast<unsigned>(GetU(p, "T")));
                   r.seed = seed;
                   return r;
                 }});
  reg.push_back({"qas_gap", "quK^t(x) + 3c·log2 n <= uK^t(x) on a 1 - n^-c fraction",
                 {{"n", "4"},
                  {"c", "1"},
                  {"t_classical", std::to_string(kQasClassicalT)},
                  {"t_quantum", std::to_string(kQuantumT)},
                  {"trials", "10000"},
                  {"control", "111111110011"}},
                 [](const Params& p, std::uint64_t seed) {
                   QasGapConfig cfg;
                   cfg.n = static_cast<unsigned>(GetU(p, "n"));
                   cfg.c = GetD(p, "c");
                   cfg.t_classical = static_cast<unsigned>(GetU(p, "t_classical"));
                   cfg.t_quantum = static_cast<unsigned>(GetU(p, "t_quantum"));
                   const auto& toy = PinnedToyQas();
                   const auto control = DescribedSampler::ClassicalVm(
                       "control:" + Get(p, "control"), BitTape::FromString(Get(p, "control")),
                       toy.sampler.m());
                   return exp_qas_gap(toy, control, cfg, GetU(p, "trials"), seed);
                 }});
  reg.push_back({"verification_curves",
                 "honest: Pr[accept] >= 1 - n^-c; Delta >= eps: Pr[accept] <= (1-eps) + n^-c",
                 {{"n", "4,8"},
                  {"eps", "0.25,0.5"},
                  {"c", "1"},
                  {"trials", "2000"},
                  {"approx", "one-sided"},
                  {"profile", "random"},
                  {"delta", "0.01"},
                  {"honest", "uniform1,half2,bern_quarter,skewed2,uniform2"},
                  {"adversary_targets", "uniform1,half2"},
                  {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t seed) {
                   const auto corpus = CorpusFrom(p);
                   const OracleChoice oracle{ParseContract(Get(p, "approx")),
                                             ParseProfile(Get(p, "profile")), GetD(p, "delta")};
                   return exp_verification_curves(
                       Pick(corpus, GetList(p, "honest")),
                       Pick(corpus, GetList(p, "adversary_targets")), Grid(p), GetD(p, "c"),
                       oracle, GetU(p, "trials"), seed);
                 }});
  reg.push_back({"one_sided_regression",
                 "a two-sided Approx of equal delta lets an adversary exceed (1-eps) + n^-c",
                 {{"n", "4,8"},
                  {"eps", "0.25"},
                  {"c", "1"},
                  {"delta", "0.01"},
                  {"trials", "2000"},
                  {"targets", "uniform1"},
                  {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t seed) {
                   return exp_one_sided_regression(Pick(CorpusFrom(p), GetList(p, "targets")),
                                                   Grid(p), GetD(p, "c"), GetD(p, "delta"),
                                                   GetU(p, "trials"), seed);
                 }});
  reg.push_back({"ver_star", "accept iff (eps^2/4n^2)·Count >= 1 - eps/2",
                 {{"n", "4"},
                  {"eps", "0.5"},
                  {"c", "1"},
                  {"trials", "2000"},
                  {"targets", "uniform1,half2"},
                  {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t seed) {
                   return exp_ver_star(Pick(CorpusFrom(p), GetList(p, "targets")),
                                       static_cast<unsigned>(GetU(p, "n")), GetD(p, "c"),
                                       GetD(p, "eps"), GetU(p, "trials"), seed);
                 }});
  reg.push_back({"fannes_prg",
                 "|H(P)-H(Q)| <= Delta·log2|U| + 1/e; Delta(D, D∘G) >= (H(D) - seed_bits - 1/e)/m",
                 {{"pairs", "1000"}, {"corpus", "v1"}},
                 [](const Params& p, std::uint64_t seed) {
                   return exp_fannes_prg(CorpusFrom(p), GetU(p, "pairs"), seed);
                 }});
  reg.push_back({"qas_verifier", "accept iff #{i : k_q,i <= k_c,i - 3c·log2 n} >= n/2",
                 {{"n", "16"},
                  {"c", "1"},
                  {"t_classical", std::to_string(kQasClassicalT)},
                  {"t_quantum", std::to_string(kQuantumT)},
                  {"qas_trials", "500"},
                  {"classical_trials_per_sampler", "20"}},
                 [](const Params& p, std::uint64_t seed) {
                   QasVerifierConfig cfg;
                   cfg.n = static_cast<unsigned>(GetU(p, "n"));
                   cfg.c = GetD(p, "c");
                   cfg.t_classical = static_cast<unsigned>(GetU(p, "t_classical"));
                   cfg.t_quantum = static_cast<unsigned>(GetU(p, "t_quantum"));
                   cfg.qas_trials = GetU(p, "qas_trials");
                   cfg.classical_trials_per_sampler = GetU(p, "classical_trials_per_sampler");
                   return exp_qas_verifier(PinnedToyQas(), cfg, seed);
                 }});
  reg.push_back({"far_close", "Delta >= 0.9 yet collision-tester gap <= 0.05; Ver separates",
                 {{"n_scale", "6"}, {"trials", "2000"}},
                 [](const Params& p, std::uint64_t seed) {
                   return exp_far_close(static_cast<unsigned>(GetU(p, "n_scale")),
                                        GetU(p, "trials"), seed);
                 }});
  reg.push_back({"embedding", "quK^t(x) <= uK^t(x) + C_embed",
                 {{"t", std::to_string(kEmbedT)}},
                 [](const Params& p, std::uint64_t) {
                   return exp_embedding(static_cast<unsigned>(GetU(p, "t")));
                 }});
  std::set<std::string> ids;
  for (const auto& e : reg) {
    if (!e.run || !ids.insert(e.id).second) {
      throw std::logic_error("experiment registry entry '" + e.id + "' is invalid");
    }
  }
  return reg;
}

}  // namespace

const std::vector<ExperimentInfo>& Registry() {
  static const std::vector<ExperimentInfo> reg = BuildRegistry();
  return reg;
}

ExperimentReport RunExperiment(const std::string& id, const Params& overrides,
                               std::uint64_t seed) {
  for (const auto& e : Registry()) {
    if (e.id != id) continue;
    Params resolved = e.defaults;
    for (const auto& [k, v] : overrides) {
      if (!resolved.count(k)) throw UnsupportedSpec("experiment '" + id + "' has no parameter '" + k + "'");
      resolved[k] = v;
    }
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport r = e.run(resolved, seed);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
    r.seed = seed;
    for (const auto& [k, v] : resolved) r.parameters.insert_or_assign(k, v);
    return r;
  }
  throw UnsupportedSpec("unknown experiment id: " + id);
}

std::string Manifest() {
  json list = json::array();
  for (const auto& e : Registry()) {
    list.push_back({{"id", e.id}, {"statement", e.statement}, {"defaults", e.defaults}});
  }
  return json({{"experiments", list}}).dump(2) + "\n";
}

}  // namespace kolmoverify::experiments
