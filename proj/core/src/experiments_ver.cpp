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

#include <algorithm>
#include <cmath>
#include <limits>

#include "experiments_internal.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/experiments.hpp"
#include "kolmoverify/qsim.hpp"

namespace kolmoverify::experiments {

using internal::Num;
using samplers::SampleBatch;
using verify::ComplexityOracle;
using verify::OracleSpec;
using verify::OracleTarget;
using verify::VerConfig;

namespace {

// Stable 64-bit label hash; row seeds must not depend on row order.
std::uint64_t Fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ComplexityOracle ExactM(OracleTarget target = OracleTarget::kUKt, unsigned t = 0) {
  OracleSpec spec;
  spec.target = target;
  spec.t = t;
  return verify::make_oracle(spec);
}

ComplexityOracle ApproxFor(const DescribedSampler& target, const OracleChoice& choice,
                           std::uint64_t seed) {
  OracleSpec spec;
  spec.target = OracleTarget::kProbability;
  spec.contract = choice.contract;
  spec.profile = choice.profile;
  spec.delta = choice.contract == verify::Contract::kExact ? 0.0 : choice.delta;
  spec.seed = seed;
  spec.sampler = target;
  return verify::make_oracle(spec);
}

bool EmitsBottom(const DescribedSampler& d) {
  return d.exact_distribution().prob(Outcome::Bottom()) > 0;
}

std::string GridTag(const GridPoint& g) {
  return "n=" + std::to_string(g.n) + ",eps=" + Num(g.eps);
}

template <typename Draw>
std::size_t CountAccepts(const Draw& draw, const DescribedSampler& target, const VerConfig& cfg,
                         const ComplexityOracle& M, const ComplexityOracle& A,
                         std::uint64_t trials, std::uint64_t row_seed) {
  std::size_t accepted = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(DeriveSeed(row_seed, i));
    accepted += verify::ver(draw(rng), target, cfg, M, A, DeriveSeed(row_seed ^ 1, i)).accepted;
  }
  return accepted;
}

ReportRow HonestRow(const std::string& param, std::size_t accepted, std::uint64_t trials,
                    double soundness) {
  ReportRow row;
  row.param = param;
  row.trial_stat = static_cast<double>(accepted) / static_cast<double>(trials);
  row.ci = Wilson(accepted, trials);
  row.bound = 1 - soundness;
  row.pass = row.ci->hi >= row.bound;
  return row;
}

ReportRow AdversaryRow(const std::string& param, std::size_t accepted, std::uint64_t trials,
                       double delta, double eps, double soundness) {
  ReportRow row;
  row.param = param;
  row.trial_stat = static_cast<double>(accepted) / static_cast<double>(trials);
  row.ci = Wilson(accepted, trials);
  row.bound = (1 - eps) + soundness;
  row.extra["delta_tv"] = delta;
  if (delta >= eps) {
    row.pass = row.ci->lo <= row.bound;
  } else {
    row.note = "delta below eps: unconstrained";
  }
  return row;
}

// The t_C-bounded classical templates that emit at least one string, each
// conditioned on not failing.
std::vector<DescribedSampler> EmittingFamily(unsigned t, unsigned m) {
  std::vector<DescribedSampler> out;
  for (auto& d : samplers::ClassicalFamily(t, m)) {
    if (d.exact_distribution().prob(Outcome::Bottom()) < 1) out.push_back(std::move(d));
  }
  return out;
}

BitTape DrawString(const DescribedSampler& d, Rng& rng) {
  for (;;) {
    const Outcome& x = d.support_list()[d.SampleIndex(rng)];
    if (!x.is_bottom()) return x.value();
  }
}

}  // namespace

std::vector<TupleAdversary> AdversaryCorpus(const DescribedSampler& target,
                                            const VerConfig& cfg) {
  std::vector<TupleAdversary> out;
  for (const auto& d : samplers::CorpusV1()) {
    if (d.m() != target.m() || d.label() == target.label() || EmitsBottom(d)) continue;
    out.push_back(TupleAdversary::Iid("iid:" + d.label(), d, cfg.s));
  }
  if (target.kind() == samplers::SamplerKind::kClassicalVm && target.randomness_bits() > 0 &&
      !target.is_stretched()) {
    out.push_back(TupleAdversary::Iid("iid:prg0:" + target.label(),
                                      samplers::prg_stretch(target, 0), cfg.s));
  }
  out.push_back(TupleAdversary::RepeatBlock("repeat:" + target.label(), target, cfg.s));
  try {
    out.push_back(samplers::NearThresholdAdversary(target, cfg.s, cfg.alpha, 0.25, 4,
                                                   DeriveSeed(kDefaultSeed, cfg.s)));
  } catch (const ZeroMassEvent&) {
    // No doubled-block tuple lands inside the acceptance window at this s.
  } catch (const UnsupportedSpec&) {
  }
  return out;
}

ExperimentReport exp_verification_curves(const std::vector<DescribedSampler>& honest_targets,
                                         const std::vector<DescribedSampler>& adversary_targets,
                                         const std::vector<GridPoint>& grid, double c,
                                         const OracleChoice& oracle, std::uint64_t trials,
                                         std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = "verification_curves";
  r.parameters = {{"c", Num(c)},
                  {"approx", verify::ToString(oracle.contract)},
                  {"delta", Num(oracle.delta)}};
  r.trials = trials;
  r.seed = seed;
  const ComplexityOracle M = ExactM();
  for (const auto& g : grid) {
    const VerConfig cfg = VerConfig::Defaults(g.n, c, g.eps);
    const std::string tag = GridTag(g);
    r.parameters[tag] = "s=" + std::to_string(cfg.s) + ",alpha=" + Num(cfg.alpha) +
                        (cfg.scaled ? ",scaled" : "");
    for (const auto& target : honest_targets) {
      const std::string param = tag + ":" + target.label() + ":honest";
      const std::uint64_t rs = DeriveSeed(seed, Fnv1a(param));
      const ComplexityOracle A = ApproxFor(target, oracle, rs);
      const auto draw = [&](Rng& rng) { return target.SampleBatchOf(cfg.s, rng); };
      r.rows.push_back(
          HonestRow(param, CountAccepts(draw, target, cfg, M, A, trials, rs), trials,
                    cfg.soundness()));
    }
    for (const auto& target : adversary_targets) {
      for (const auto& adv : AdversaryCorpus(target, cfg)) {
        const std::string param = tag + ":" + target.label() + ":" + adv.label();
        const std::uint64_t rs = DeriveSeed(seed, Fnv1a(param));
        const ComplexityOracle A = ApproxFor(target, oracle, rs);
        const double delta = tv_distance(adv.Marginal(), target.exact_distribution());
        const auto draw = [&](Rng& rng) { return adv.DrawBatch(rng); };
        r.rows.push_back(AdversaryRow(param, CountAccepts(draw, target, cfg, M, A, trials, rs),
                                      trials, delta, g.eps, cfg.soundness()));
      }
    }
  }
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_one_sided_regression(const std::vector<DescribedSampler>& targets,
                                          const std::vector<GridPoint>& grid, double c,
                                          double delta, std::uint64_t trials,
                                          std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = "one_sided_regression";
  r.parameters = {{"c", Num(c)},
                  {"delta", Num(delta)},
                  {"approx", "two-sided saturating"},
                  {"pass_rule", "at least one adversary exceeds the security bound"}};
  r.trials = trials;
  r.seed = seed;
  const ComplexityOracle M = ExactM();
  const OracleChoice two_sided{verify::Contract::kTwoSided, verify::ErrorProfile::kSaturating,
                               delta};
  const OracleChoice one_sided{verify::Contract::kOneSided, verify::ErrorProfile::kSaturating,
                               delta};
  std::size_t violations = 0;
  for (const auto& g : grid) {
    const VerConfig cfg = VerConfig::Defaults(g.n, c, g.eps);
    for (const auto& target : targets) {
      for (const auto& adv : AdversaryCorpus(target, cfg)) {
        const double d = tv_distance(adv.Marginal(), target.exact_distribution());
        if (d < g.eps) continue;
        const std::string param = GridTag(g) + ":" + target.label() + ":" + adv.label();
        const std::uint64_t rs = DeriveSeed(seed, Fnv1a(param));
        const auto draw = [&](Rng& rng) { return adv.DrawBatch(rng); };
        ReportRow row = AdversaryRow(
            param, CountAccepts(draw, target, cfg, M, ApproxFor(target, two_sided, rs), trials, rs),
            trials, d, g.eps, cfg.soundness());
        if (!row.pass) {
          ++violations;
          // The same adversary against the one-sided oracle of equal delta.
          const std::size_t acc =
              CountAccepts(draw, target, cfg, M, ApproxFor(target, one_sided, rs), trials, rs);
          row.extra["one_sided_acceptance"] = static_cast<double>(acc) / static_cast<double>(trials);
          row.note = "two-sided oracle admits adversary";
        }
        r.rows.push_back(std::move(row));
      }
    }
  }
  r.observed["violations"] = static_cast<double>(violations);
  r.pass = violations > 0;
  return r;
}

ExperimentReport exp_ver_star(const std::vector<DescribedSampler>& targets, unsigned n, double c,
                              double eps, std::uint64_t trials, std::uint64_t seed) {
  const auto cfg = verify::VerStarConfig::Defaults(n, c, eps);
  ExperimentReport r;
  r.experiment_id = "ver_star";
  r.parameters = {{"n", std::to_string(n)},
                  {"c", Num(c)},
                  {"eps", Num(eps)},
                  {"blocks", std::to_string(cfg.blocks)},
                  {"inner_s", std::to_string(cfg.inner.s)},
                  {"scaled", cfg.scaled ? "true" : "false"}};
  r.trials = trials;
  r.seed = seed;
  const ComplexityOracle M = ExactM();
  const OracleChoice oracle{};
  const double soundness = cfg.inner.soundness();
  auto count = [&](const auto& draw, const DescribedSampler& target, std::uint64_t rs) {
    const ComplexityOracle A = ApproxFor(target, oracle, rs);
    std::size_t accepted = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
      Rng rng(DeriveSeed(rs, i));
      accepted += verify::ver_star(draw(rng), target, cfg, M, A, DeriveSeed(rs ^ 1, i)).accepted;
    }
    return accepted;
  };
  for (const auto& target : targets) {
    {
      const std::string param = target.label() + ":honest";
      const std::uint64_t rs = DeriveSeed(seed, Fnv1a(param));
      const std::size_t acc =
          count([&](Rng& rng) { return target.SampleBatchOf(cfg.total_samples(), rng); }, target, rs);
      ReportRow row;
      row.param = param;
      row.trial_stat = static_cast<double>(acc) / static_cast<double>(trials);
      row.ci = Wilson(acc, trials);
      row.bound = 0.999;
      row.extra["hoeffding"] = 1 - std::exp(-0.5 * n * n);
      row.pass = row.trial_stat >= row.bound;
      r.rows.push_back(std::move(row));
    }
    for (const auto& base : AdversaryCorpus(target, cfg.inner)) {
      if (base.strategy() != TupleAdversary::Strategy::kIid) continue;
      const TupleAdversary adv = base.WithArity(cfg.total_samples());
      const std::string param = target.label() + ":" + adv.label();
      const std::uint64_t rs = DeriveSeed(seed, Fnv1a(param));
      const double d = tv_distance(adv.Marginal(), target.exact_distribution());
      const std::size_t acc = count([&](Rng& rng) { return adv.DrawBatch(rng); }, target, rs);
      ReportRow row;
      row.param = param;
      row.trial_stat = static_cast<double>(trials - acc) / static_cast<double>(trials);
      row.ci = Wilson(trials - acc, trials);
      row.bound = 1 - soundness;
      row.extra["delta_tv"] = d;
      if (d >= eps) {
        row.pass = row.ci->hi >= row.bound;
      } else {
        row.note = "delta below eps: unconstrained";
      }
      r.rows.push_back(std::move(row));
    }
  }
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_fannes_prg(const std::vector<DescribedSampler>& corpus, std::uint64_t pairs,
                                std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = "fannes_prg";
  r.parameters = {{"universe", "16"}, {"pairs", std::to_string(pairs)}};
  r.trials = pairs;
  r.seed = seed;
  // Random dyadic pairs over a 16-outcome universe.
  auto random_dist = [](Rng& rng) {
    std::map<Outcome, Rational> m;
    long left = 256;
    const long support = 1 + static_cast<long>(rng.below(16));
    for (long i = 0; i < support && left > 0; ++i) {
      const long w = i + 1 == support ? left
                                      : static_cast<long>(rng.below(static_cast<std::uint64_t>(left) + 1));
      m[Outcome(BitTape::FromInteger(rng.below(16), 4))] += Rational(w, 256);
      left -= w;
    }
    if (left > 0) m[Outcome(BitTape::FromInteger(0, 4))] += Rational(left, 256);
    return ExplicitDistribution::FromExact(std::move(m));
  };
  Rng rng(seed);
  std::uint64_t violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const auto g = fannes_gap(random_dist(rng), random_dist(rng), 16);
    violations += g.lhs > g.rhs + 1e-12;
    worst = std::max(worst, g.lhs - g.rhs);
  }
  {
    ReportRow row;
    row.param = "fannes:random_pairs";
    row.trial_stat = static_cast<double>(violations);
    row.bound = 0;
    row.extra["max_lhs_minus_rhs"] = worst;
    row.pass = violations == 0;
    r.rows.push_back(std::move(row));
  }
  std::size_t stretches = 0, attack_violations = 0;
  for (const auto& base : corpus) {
    if (base.kind() != samplers::SamplerKind::kClassicalVm || base.is_stretched()) continue;
    const ExplicitDistribution& d = base.exact_distribution();
    const double h_base = shannon_entropy(d);
    for (unsigned k = 0; k < base.randomness_bits(); ++k) {
      const auto st = samplers::prg_stretch(base, k);
      const ExplicitDistribution& ds = st.exact_distribution();
      const double h = shannon_entropy(ds);
      const double delta = tv_distance(d, ds);
      ++stretches;
      ReportRow ent;
      ent.param = base.label() + ":seed_bits=" + std::to_string(k) + ":entropy";
      ent.trial_stat = h;
      ent.bound = k;
      ent.pass = h <= k + 1e-12;
      r.rows.push_back(std::move(ent));
      ReportRow att;
      att.param = base.label() + ":seed_bits=" + std::to_string(k) + ":distance";
      att.trial_stat = delta;
      att.bound = (h_base - k - 1 / M_E) / base.m();
      att.extra["H_base"] = h_base;
      att.pass = delta >= att.bound - 1e-12;
      if (!att.pass) {
        ++attack_violations;
        att.note = "+1/e rearrangement fails; the binary-entropy term exceeds 1/e here";
      }
      r.rows.push_back(std::move(att));
    }
  }
  r.observed["fannes_violations"] = static_cast<double>(violations);
  r.observed["stretches"] = static_cast<double>(stretches);
  r.observed["attack_bound_violations"] = static_cast<double>(attack_violations);
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_qas_gap(const samplers::ToyQas& toy, const DescribedSampler& control,
                             const QasGapConfig& cfg, std::uint64_t trials, std::uint64_t seed) {
  if (cfg.t_classical > bitvm::kTMax) throw BudgetTooLarge("t_C exceeds T_MAX");
  ExperimentReport r;
  r.experiment_id = "qas_gap";
  const double threshold = 3 * cfg.c * std::log2(static_cast<double>(cfg.n));
  const double soundness = std::pow(static_cast<double>(cfg.n), -cfg.c);
  r.parameters = {{"n", std::to_string(cfg.n)},
                  {"c", Num(cfg.c)},
                  {"t_classical", std::to_string(cfg.t_classical)},
                  {"t_quantum", std::to_string(cfg.t_quantum)},
                  {"threshold", Num(threshold)},
                  {"toy", toy.sampler.label()},
                  {"control", control.label()}};
  r.trials = trials;
  r.seed = seed;
  const ComplexityOracle mc = ExactM(OracleTarget::kUKt, cfg.t_classical);
  const ComplexityOracle mq = ExactM(OracleTarget::kQuKt, cfg.t_quantum);
  // uK^{t_C}(x) - quK^{t_Q}(x) per outcome, then Monte Carlo over indices.
  auto gaps_of = [&](const DescribedSampler& d, std::uint64_t rs) {
    std::vector<double> per;
    for (const auto& x : d.support_list()) {
      if (x.is_bottom()) {
        per.push_back(-std::numeric_limits<double>::infinity());
        continue;
      }
      const SampleBatch b = SampleBatch::FromTapes({x.value()});
      per.push_back(mc.Complexity(b) - mq.Complexity(b));
    }
    std::vector<double> drawn(trials);
    Rng rng(rs);
    for (auto& g : drawn) g = per[d.SampleIndex(rng)];
    return drawn;
  };
  auto fraction = [&](const std::vector<double>& gaps, double thr) {
    return static_cast<std::size_t>(
        std::count_if(gaps.begin(), gaps.end(), [&](double g) { return g >= thr; }));
  };
  auto median = [](std::vector<double> g) {
    std::nth_element(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(g.size() / 2), g.end());
    return g[g.size() / 2];
  };
  const auto toy_gaps = gaps_of(toy.sampler, DeriveSeed(seed, 0));
  const auto ctl_gaps = gaps_of(control, DeriveSeed(seed, 1));
  {
    const std::size_t hits = fraction(toy_gaps, threshold);
    ReportRow row;
    row.param = toy.sampler.label() + ":gap>=threshold";
    row.trial_stat = static_cast<double>(hits) / static_cast<double>(trials);
    row.ci = Wilson(hits, trials);
    row.bound = 1 - soundness;
    row.pass = row.ci->hi >= row.bound;
    row.extra["median_gap"] = median(toy_gaps);
    row.extra["certificate"] = toy.certificate;
    r.rows.push_back(std::move(row));
  }
  {
    const std::size_t hits = fraction(ctl_gaps, threshold);
    ReportRow row;
    row.param = control.label() + ":control";
    row.trial_stat = static_cast<double>(hits) / static_cast<double>(trials);
    row.ci = Wilson(hits, trials);
    row.bound = soundness;
    row.pass = row.ci->lo <= row.bound;
    row.extra["median_gap"] = median(ctl_gaps);
    r.rows.push_back(std::move(row));
  }
  {
    ReportRow row;
    row.param = toy.sampler.label() + ":monotone_in_threshold";
    std::size_t prev = trials + 1;
    for (int thr = -4; thr <= 2 * static_cast<int>(std::ceil(threshold)); ++thr) {
      const std::size_t hits = fraction(toy_gaps, thr);
      row.pass = row.pass && hits <= prev;
      prev = hits;
    }
    row.trial_stat = row.pass ? 1 : 0;
    row.bound = 1;
    r.rows.push_back(std::move(row));
  }
  r.observed["median_gap"] = median(toy_gaps);
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_qas_verifier(const samplers::ToyQas& toy, const QasVerifierConfig& cfg,
                                  std::uint64_t seed) {
  ExperimentReport r;
  r.experiment_id = "qas_verifier";
  r.parameters = {{"n", std::to_string(cfg.n)},
                  {"c", Num(cfg.c)},
                  {"t_classical", std::to_string(cfg.t_classical)},
                  {"t_quantum", std::to_string(cfg.t_quantum)},
                  {"classical_trials_per_sampler", std::to_string(cfg.classical_trials_per_sampler)},
                  {"toy", toy.sampler.label()}};
  r.trials = cfg.qas_trials;
  r.seed = seed;
  const ComplexityOracle mc = ExactM(OracleTarget::kUKt, cfg.t_classical);
  const ComplexityOracle mq = ExactM(OracleTarget::kQuKt, cfg.t_quantum);
  auto run = [&](const DescribedSampler& d, std::uint64_t trials, std::uint64_t rs) {
    std::size_t accepted = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
      Rng rng(DeriveSeed(rs, i));
      std::vector<BitTape> samples;
      for (unsigned j = 0; j < cfg.n; ++j) samples.push_back(DrawString(d, rng));
      accepted += verify::qas_verify(samples, cfg.n, mc, mq, cfg.c, DeriveSeed(rs ^ 1, i)).accepted;
    }
    return accepted;
  };
  {
    const std::size_t acc = run(toy.sampler, cfg.qas_trials, DeriveSeed(seed, 0));
    ReportRow row;
    row.param = toy.sampler.label() + ":acceptance";
    row.trial_stat = static_cast<double>(acc) / static_cast<double>(cfg.qas_trials);
    row.ci = Wilson(acc, cfg.qas_trials);
    row.bound = 0.95;
    row.pass = row.trial_stat >= row.bound;
    row.extra["certificate"] = toy.certificate;
    r.rows.push_back(std::move(row));
  }
  {
    const auto family = EmittingFamily(cfg.t_classical, toy.sampler.m());
    std::size_t acc = 0, worst = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const std::size_t a = run(family[i], cfg.classical_trials_per_sampler, DeriveSeed(seed, 1 + i));
      acc += a;
      worst = std::max(worst, a);
    }
    const std::uint64_t total = family.size() * cfg.classical_trials_per_sampler;
    ReportRow row;
    row.param = "classical_family:acceptance";
    row.trial_stat = total ? static_cast<double>(acc) / static_cast<double>(total) : 0;
    row.ci = Wilson(acc, total);
    row.bound = 0.01;
    row.pass = row.trial_stat <= row.bound;
    row.extra["samplers"] = static_cast<double>(family.size());
    row.extra["max_per_sampler"] =
        static_cast<double>(worst) / static_cast<double>(cfg.classical_trials_per_sampler);
    r.rows.push_back(std::move(row));
  }
  r.pass = r.RecomputePass();
  return r;
}

ExperimentReport exp_far_close(unsigned n_scale, std::uint64_t trials, std::uint64_t seed) {
  const auto [a, b] = samplers::far_close_pair(n_scale);
  ExperimentReport r;
  r.experiment_id = "far_close";
  r.parameters = {{"n_scale", std::to_string(n_scale)}, {"collision_k", "24"}};
  r.trials = trials;
  r.seed = seed;
  const ExplicitDistribution& da = a.exact_distribution();
  {
    ReportRow row;
    row.param = "tv_distance";
    row.trial_stat = ToDouble(tv_distance_exact(da, b.exact_distribution()));
    row.bound = 0.9;
    row.pass = row.trial_stat >= row.bound;
    r.rows.push_back(std::move(row));
  }
  {
    const unsigned t = static_cast<unsigned>(trials);
    const double acc_a = samplers::CollisionTesterAcceptance(a, da, 24, t, DeriveSeed(seed, 0));
    const double acc_b = samplers::CollisionTesterAcceptance(b, da, 24, t, DeriveSeed(seed, 0));
    ReportRow row;
    row.param = "collision_tester:acceptance_gap";
    row.trial_stat = std::abs(acc_a - acc_b);
    row.bound = 0.05;
    row.pass = row.trial_stat <= row.bound;
    row.extra["acceptance_a"] = acc_a;
    row.extra["acceptance_b"] = acc_b;
    r.rows.push_back(std::move(row));
  }
  // Exact oracles see the parity bit: Ver separates the pair.
  const VerConfig cfg = VerConfig::Defaults(4, 1, 0.25);
  const ComplexityOracle M = ExactM();
  const ComplexityOracle A = ApproxFor(a, {verify::Contract::kExact}, 0);
  const std::uint64_t rs = DeriveSeed(seed, 2);
  r.rows.push_back(HonestRow(
      "ver:" + a.label() + ":honest",
      CountAccepts([&](Rng& rng) { return a.SampleBatchOf(cfg.s, rng); }, a, cfg, M, A, trials, rs),
      trials, cfg.soundness()));
  r.rows.push_back(AdversaryRow(
      "ver:" + a.label() + ":iid:" + b.label(),
      CountAccepts([&](Rng& rng) { return b.SampleBatchOf(cfg.s, rng); }, a, cfg, M, A, trials, rs),
      trials, 1.0, cfg.eps, cfg.soundness()));
  r.pass = r.RecomputePass();
  return r;
}

const samplers::ToyQas& PinnedToyQas() {
  static const samplers::ToyQas toy = samplers::toy_qas(
      {qsim::ParseCircuitText("q 4\nh 0\nh 1\nh 2\nend"), kQasClassicalT, "toy_qas_h3"});
  return toy;
}

}  // namespace kolmoverify::experiments
