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

#include <algorithm>
#include <cmath>
#include <ctime>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "experiments_internal.hpp"
#include "json_util.hpp"
#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/qsim.hpp"

namespace kolmoverify::experiments {

using nlohmann::json;

namespace {

constexpr double kInfD = std::numeric_limits<double>::infinity();

using internal::Num;

double Log2Prob(const ExplicitDistribution& d, const Outcome& x) {
  return d.is_exact() ? Log2(d.exact_prob(x)) : std::log2(d.prob(x));
}

}  // namespace

bool ExperimentReport::RecomputePass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string ExperimentReport::ToJson(bool with_timestamp) const {
  json j;
  j["experiment_id"] = experiment_id;
  j["parameters"] = parameters;
  j["trials"] = trials;
  j["seed"] = seed;
  json obs = json::object();
  for (const auto& [k, v] : observed) obs[k] = JsonNumber(v);
  j["observed"] = obs;
  json rs = json::array();
  for (const auto& r : rows) {
    json row;
    row["param"] = r.param;
    row["trial_stat"] = JsonNumber(r.trial_stat);
    row["bound"] = JsonNumber(r.bound);
    row["pass"] = r.pass;
    row["ci"] = r.ci ? json::array({r.ci->lo, r.ci->hi}) : json(nullptr);
    json extra = json::object();
    for (const auto& [k, v] : r.extra) extra[k] = JsonNumber(v);
    row["extra"] = extra;
    if (!r.note.empty()) row["note"] = r.note;
    rs.push_back(std::move(row));
  }
  j["rows"] = std::move(rs);
  j["pass"] = pass;
  if (with_timestamp) {
    j["runtime_ms"] = runtime_ms;
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  return j.dump(2) + "\n";
}

std::string ExperimentReport::ToCsv(bool header) const {
  std::ostringstream os;
  if (header) os << "experiment,param,trial_stat,bound,pass\n";
  for (const auto& r : rows) {
    std::string param = r.param;
    if (param.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : param) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      param = quoted + "\"";
    }
    os << experiment_id << ',' << param << ',' << Num(r.trial_stat) << ',' << Num(r.bound) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

double ClassicalComplexity(const BitTape& x, unsigned t) {
  const bitvm::VmBudget b{1, t, static_cast<unsigned>(x.size())};
  return bitvm::uKt(x, b, t <= bitvm::kTMax ? bitvm::Mode::Exact() : bitvm::Mode::Counted());
}

double QuantumComplexity(const BitTape& x, unsigned t) {
  const bitvm::VmBudget b{1, t, static_cast<unsigned>(x.size())};
  return qsim::quKt(x, b, t <= qsim::kTMaxQ ? bitvm::Mode::Exact() : bitvm::Mode::Counted());
}

double IncompressibilityConstant(unsigned t, unsigned m, bool quantum) {
  const bitvm::VmBudget b{1, t, m};
  const ExplicitDistribution d =
      quantum ? qsim::quantum_universal_distribution(
                    b, t <= qsim::kTMaxQ ? bitvm::Mode::Exact() : bitvm::Mode::Counted())
                    .support
              : bitvm::universal_distribution(
                    b, t <= bitvm::kTMax ? bitvm::Mode::Exact() : bitvm::Mode::Counted())
                    .support;
  double c = 0;
  for (const auto& [x, p] : d.entries()) {
    if (x.is_bottom()) continue;
    c = std::max(c, -Log2Prob(d, x) - m);
  }
  return c;
}

ExperimentReport exp_coding(const std::vector<DescribedSampler>& corpus, unsigned T, bool quantum) {
  ExperimentReport r;
  r.experiment_id = quantum ? "coding_quantum" : "coding";
  r.parameters = {{"T", std::to_string(T)}};
  double c = -kInfD;
  for (const auto& d : corpus) {
    const bool is_q = d.kind() == samplers::SamplerKind::kQuantumCircuit;
    if (is_q != quantum) continue;
    if (!quantum && d.kind() == samplers::SamplerKind::kClassicalVm && d.budget().t > T) continue;
    const auto& dist = d.exact_distribution();
    double slack = -kInfD;
    for (const auto& [x, p] : dist.entries()) {
      if (x.is_bottom()) continue;
      const double k = quantum ? QuantumComplexity(x.value(), T) : ClassicalComplexity(x.value(), T);
      slack = std::max(slack, k + Log2Prob(dist, x) - 2.0 * d.description_length());
    }
    ReportRow row;
    row.param = d.label();
    row.trial_stat = slack;
    row.bound = kInfD;
    row.pass = std::isfinite(slack);
    row.extra["description_length"] = static_cast<double>(d.description_length());
    r.rows.push_back(std::move(row));
    c = std::max(c, slack);
  }
  r.observed[quantum ? "c_q" : "c_univ"] = c;
  r.pass = !r.rows.empty() && r.RecomputePass();
  return r;
}

ExperimentReport exp_incompressibility(const DescribedSampler& sampler,
                                       const std::vector<double>& alphas, std::uint64_t trials,
                                       std::uint64_t seed, unsigned T) {
  const bool quantum = sampler.kind() == samplers::SamplerKind::kQuantumCircuit;
  ExperimentReport r;
  r.experiment_id = "incompressibility";
  r.parameters = {{"sampler", sampler.label()}, {"T", std::to_string(T)}};
  r.trials = trials;
  r.seed = seed;
  const unsigned m = sampler.m();
  const double c = IncompressibilityConstant(T, m, quantum);
  r.observed["c"] = c;
  const auto& support = sampler.support_list();
  const auto& dist = sampler.exact_distribution();
  std::vector<double> slack(support.size(), -kInfD);  // -log2 p(x) - K(x)
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].is_bottom()) continue;
    const BitTape& x = support[i].value();
    const double k = quantum ? QuantumComplexity(x, T) : ClassicalComplexity(x, T);
    slack[i] = -Log2Prob(dist, support[i]) - k;
  }
  std::vector<std::uint64_t> hits(alphas.size(), 0);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double s = slack[sampler.SampleIndex(rng)];
    for (std::size_t a = 0; a < alphas.size(); ++a) hits[a] += s >= alphas[a];
  }
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    ReportRow row;
    row.param = sampler.label() + ":alpha=" + Num(alphas[a]);
    row.trial_stat = static_cast<double>(hits[a]) / static_cast<double>(trials);
    row.bound = (m + c) * std::exp2(1 - alphas[a]);
    row.ci = Wilson(hits[a], trials);
    row.pass = row.ci->lo <= row.bound;
    r.rows.push_back(std::move(row));
  }
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_embedding(unsigned t) {
  ExperimentReport r;
  r.experiment_id = "embedding";
  r.parameters = {{"t", std::to_string(t)}};
  double c = -kInfD;
  for (const char* s : {"0", "00"}) {
    const BitTape x = BitTape::FromString(s);
    ReportRow row;
    row.param = s;
    const double q = QuantumComplexity(x, t);
    const double k = ClassicalComplexity(x, t);
    row.trial_stat = q - k;
    row.bound = kInfD;
    row.pass = std::isfinite(row.trial_stat);
    row.extra["quKt"] = q;
    row.extra["uKt"] = k;
    c = std::max(c, row.trial_stat);
    r.rows.push_back(std::move(row));
  }
  r.observed["C_embed"] = c;
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_normalization(unsigned t_max, std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = "normalization";
  r.parameters = {{"t_max", std::to_string(t_max)}};
  r.seed = seed;
  for (unsigned t = 1; t <= t_max; ++t) {
    // Classical, exact: dyadic, total exactly 1, non-⊥ mass <= 1.
    bool ok = true;
    double worst = 0;
    for (unsigned m = 1; m <= 8; ++m) {
      const auto u = bitvm::universal_distribution({1, t, m});
      Rational total = 0, strings = 0;
      for (const auto& [x, p] : u.support.exact_entries()) {
        ok = ok && IsDyadic(p) && denominator(p) <= Pow2(t);
        total += p;
        if (!x.is_bottom()) strings += p;
      }
      ok = ok && total == 1 && strings <= 1;
      worst = std::max(worst, ToDouble(strings));
      const auto sampled = bitvm::universal_distribution(
          {1, t, m}, bitvm::Mode::Sampled(4096, DeriveSeed(seed, t * 16 + m)));
      ok = ok && std::abs(sampled.support.total_mass() - 1.0) <= kTolP;
    }
    ReportRow row;
    row.param = "classical:t=" + std::to_string(t);
    row.trial_stat = worst;
    row.bound = 1;
    row.pass = ok;
    r.rows.push_back(std::move(row));
  }
  for (unsigned t = 1; t <= std::min(t_max, qsim::kTMaxQ); ++t) {
    bool ok = true;
    double worst = 0;
    for (unsigned m = 1; m <= 3; ++m) {
      const auto q = qsim::quantum_universal_distribution({1, t, m});
      double strings = 0;
      for (const auto& [x, p] : q.support.entries()) {
        if (!x.is_bottom()) strings += p;
      }
      ok = ok && std::abs(q.support.total_mass() - 1.0) <= kTolP && strings <= 1.0 + kTolP;
      worst = std::max(worst, strings);
    }
    ReportRow row;
    row.param = "quantum:t=" + std::to_string(t);
    row.trial_stat = worst;
    row.bound = 1;
    row.pass = ok;
    r.rows.push_back(std::move(row));
  }
  r.pass = r.RecomputePass();
  return r;
}

}  // namespace kolmoverify::experiments
