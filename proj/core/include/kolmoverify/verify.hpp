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

#ifndef KOLMOVERIFY_VERIFY_HPP_
#define KOLMOVERIFY_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kolmoverify/oracle.hpp"
#include "kolmoverify/samplers.hpp"

namespace kolmoverify::verify {

inline constexpr std::size_t kDeskSCap = std::size_t{1} << 16;

enum class Flavor { kClassical, kQuantum };

struct VerConfig {
  unsigned n = 4;
  double c = 1.0;
  double eps = 0.25;
  unsigned t = 0;  // oracle budget; 0 = unbounded-time limit
  double alpha = 4;
  std::size_t s = 1;
  Flavor flavor = Flavor::kClassical;
  // True when the formula for s exceeded kDeskSCap and was truncated.
  bool scaled = false;

  // alpha = ceil((log2 n)^2); s = ceil(n^{4c}·(log2(1/(1-eps)) + 2(log2 n)^2)),
  // capped at kDeskSCap.
  static VerConfig Defaults(unsigned n, double c, double eps,
                            Flavor flavor = Flavor::kClassical);
  double soundness() const;  // n^{-c}
};

// Ver*: `blocks` = ceil(4n^2/eps^2) runs of the inner Ver on `inner.s` samples.
struct VerStarConfig {
  VerConfig inner;
  std::size_t blocks = 1;
  bool scaled = false;

  std::size_t total_samples() const { return inner.s * blocks; }
  // Keeps the block count and shrinks the inner s so blocks·s <= kDeskSCap
  // when the paper's s* is larger.
  static VerStarConfig Defaults(unsigned n, double c, double eps);
};

struct Verdict {
  bool accepted = false;
  double k = 0;          // reported complexity (Ver)
  double neg_log_p = 0;  // reported -log2 p (Ver)
  double alpha = 0;
  std::vector<bool> blocks;   // Ver*: per-block results
  std::vector<double> gaps;   // QAS: k_c - k_q per sample
  std::size_t count = 0;      // Ver*/QAS accept count
  std::uint64_t seed = 0;

};

// Accept iff -log2 p <= k + alpha (ties accept). p == 0 rejects without
// querying M; k is then NaN.
Verdict ver(const SampleBatch& samples, const samplers::DescribedSampler& target,
            const VerConfig& cfg, const ComplexityOracle& M, const ComplexityOracle& approx,
            std::uint64_t nonce = 0);
Verdict ver(const std::vector<BitTape>& samples, const samplers::DescribedSampler& target,
            const VerConfig& cfg, const ComplexityOracle& M, const ComplexityOracle& approx,
            std::uint64_t nonce = 0);

Verdict ver_star(const SampleBatch& samples, const samplers::DescribedSampler& target,
                 const VerStarConfig& cfg, const ComplexityOracle& M,
                 const ComplexityOracle& approx, std::uint64_t nonce = 0);

// Threshold 3c·log2 n. A sample with k_q = +inf never counts; k_c = +inf with
// finite k_q always counts.
Verdict qas_verify(const std::vector<BitTape>& samples, unsigned n, const ComplexityOracle& m_c,
                   const ComplexityOracle& m_q, double c, std::uint64_t nonce = 0);
bool QasGapHolds(double k_c, double k_q, unsigned n, double c);

}  // namespace kolmoverify::verify

#endif  // KOLMOVERIFY_VERIFY_HPP_
