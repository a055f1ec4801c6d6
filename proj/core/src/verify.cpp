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

#include "kolmoverify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kolmoverify/errors.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify::verify {

VerConfig VerConfig::Defaults(unsigned n, double c, double eps, Flavor flavor) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  VerConfig cfg;
  cfg.n = n;
  cfg.c = c;
  cfg.eps = eps;
  cfg.flavor = flavor;
  const double lg = std::log2(static_cast<double>(n));
  cfg.alpha = std::ceil(lg * lg);
  const double s = std::ceil(std::pow(n, 4 * c) * (std::log2(1 / (1 - eps)) + 2 * lg * lg));
  cfg.scaled = s > static_cast<double>(kDeskSCap);
  cfg.s = cfg.scaled ? kDeskSCap : static_cast<std::size_t>(s);
  return cfg;
}

double VerConfig::soundness() const { return std::pow(static_cast<double>(n), -c); }

VerStarConfig VerStarConfig::Defaults(unsigned n, double c, double eps) {
  VerStarConfig cfg;
  cfg.inner = VerConfig::Defaults(n, c, eps);
  cfg.blocks = static_cast<std::size_t>(std::ceil(4.0 * n * n / (eps * eps)));
  if (cfg.inner.s * cfg.blocks > kDeskSCap) {
    cfg.scaled = true;
    cfg.inner.s = std::max<std::size_t>(1, kDeskSCap / cfg.blocks);
  }
  cfg.scaled = cfg.scaled || cfg.inner.scaled;
  return cfg;
}

namespace {

void CheckOracles(const VerConfig& cfg, const ComplexityOracle& M,
                  const ComplexityOracle& approx) {
  const OracleTarget want =
      cfg.flavor == Flavor::kClassical ? OracleTarget::kUKt : OracleTarget::kQuKt;
  if (M.target() != want) throw OracleMismatch("M must target " + ToString(want));
  if (approx.target() != OracleTarget::kProbability) {
    throw OracleMismatch("Approx must target a probability");
  }
}

}  // namespace

Verdict ver(const SampleBatch& samples, const samplers::DescribedSampler& target,
            const VerConfig& cfg, const ComplexityOracle& M, const ComplexityOracle& approx,
            std::uint64_t nonce) {
  CheckOracles(cfg, M, approx);
  if (samples.size() != cfg.s) throw WrongArity("ver expects exactly s samples");
  if (samples.m != target.m()) throw WrongArity("sample length differs from the target's m");
  Verdict v;
  v.alpha = cfg.alpha;
  v.seed = approx.spec().seed;
  v.neg_log_p = -approx.Log2Probability(samples, DeriveSeed(nonce, 1));
  // p == 0 rejects whatever k is, so M is not queried (k reported as NaN).
  if (std::isinf(v.neg_log_p)) {
    v.k = std::numeric_limits<double>::quiet_NaN();
    v.accepted = false;
    return v;
  }
  v.k = M.Complexity(samples, DeriveSeed(nonce, 2));
  v.accepted = v.neg_log_p <= v.k + cfg.alpha;
  return v;
}

Verdict ver(const std::vector<BitTape>& samples, const samplers::DescribedSampler& target,
            const VerConfig& cfg, const ComplexityOracle& M, const ComplexityOracle& approx,
            std::uint64_t nonce) {
  for (const auto& x : samples) {
    if (x.size() != target.m()) throw WrongArity("sample length differs from the target's m");
  }
  return ver(SampleBatch::FromTapes(samples), target, cfg, M, approx, nonce);
}

Verdict ver_star(const SampleBatch& samples, const samplers::DescribedSampler& target,
                 const VerStarConfig& cfg, const ComplexityOracle& M,
                 const ComplexityOracle& approx, std::uint64_t nonce) {
  if (samples.size() != cfg.total_samples()) throw WrongArity("ver_star expects s* samples");
  Verdict v;
  v.alpha = cfg.inner.alpha;
  v.seed = approx.spec().seed;
  SampleBatch block;
  block.m = samples.m;
  for (std::size_t b = 0; b < cfg.blocks; ++b) {
    const auto first = samples.codes.begin() + static_cast<std::ptrdiff_t>(b * cfg.inner.s);
    block.codes.assign(first, first + static_cast<std::ptrdiff_t>(cfg.inner.s));
    const bool ok = ver(block, target, cfg.inner, M, approx, DeriveSeed(nonce, b)).accepted;
    v.blocks.push_back(ok);
    v.count += ok;
  }
  const double eps = cfg.inner.eps;
  const double n = cfg.inner.n;
  v.accepted = eps * eps / (4 * n * n) * static_cast<double>(v.count) >= 1 - eps / 2;
  return v;
}

bool QasGapHolds(double k_c, double k_q, unsigned n, double c) {
  if (std::isinf(k_q)) return false;
  if (std::isinf(k_c)) return true;
  return k_q <= k_c - 3 * c * std::log2(static_cast<double>(n));
}

Verdict qas_verify(const std::vector<BitTape>& samples, unsigned n, const ComplexityOracle& m_c,
                   const ComplexityOracle& m_q, double c, std::uint64_t nonce) {
  if (samples.size() != n) throw WrongArity("qas_verify expects exactly n samples");
  if (m_c.target() != OracleTarget::kUKt || m_q.target() != OracleTarget::kQuKt) {
    throw OracleMismatch("qas_verify needs a uKt and a quKt oracle");
  }
  Verdict v;
  v.seed = m_q.spec().seed;
  v.alpha = 3 * c * std::log2(static_cast<double>(n));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SampleBatch one = SampleBatch::FromTapes({samples[i]});
    const double kc = m_c.Complexity(one, DeriveSeed(nonce, 2 * i));
    const double kq = m_q.Complexity(one, DeriveSeed(nonce, 2 * i + 1));
    v.gaps.push_back(kc - kq);
    v.count += QasGapHolds(kc, kq, n, c);
  }
  v.accepted = 2 * v.count >= n;
  return v;
}

}  // namespace kolmoverify::verify
