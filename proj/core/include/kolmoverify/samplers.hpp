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

#ifndef KOLMOVERIFY_SAMPLERS_HPP_
#define KOLMOVERIFY_SAMPLERS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/dist.hpp"
#include "kolmoverify/qsim.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify::samplers {

using bitvm::VmBudget;

enum class SamplerKind { kClassicalVm, kQuantumCircuit, kExplicitTable };

std::string ToString(SamplerKind kind);
SamplerKind ParseSamplerKind(const std::string& s);

// Template nibbles understood by classical-vm samplers on top of KVM-1.
// Each consumes one random bit.
inline constexpr unsigned kRandEmit = 0xF;  // EMIT0 or EMIT1
inline constexpr unsigned kRandDbl = 0xE;   // DBL or NOP
// Largest randomness/seed length enumerated for exact distributions.
inline constexpr unsigned kMaxRandomBits = 24;

// A tuple of m-bit strings packed as integers (first bit most significant).
struct SampleBatch {
  unsigned m = 0;
  std::vector<std::uint32_t> codes;

  std::size_t size() const { return codes.size(); }
  BitTape at(std::size_t i) const { return BitTape::FromInteger(codes[i], m); }
  BitTape Concatenated() const;
  std::vector<BitTape> ToTapes() const;
  static SampleBatch FromTapes(const std::vector<BitTape>& tuple);
  bool operator==(const SampleBatch&) const = default;
};

enum class Expander { kXorshift, kIdentity };

// Expands `seed` (low `seed_bits` bits) to `out_bits` pseudorandom bits.
// Not cryptographic.
BitTape Expand(Expander prg, std::uint64_t seed, unsigned seed_bits, unsigned out_bits);

// An executable sampler with its description length |D|.
class DescribedSampler {
 public:
  // `program` is a KVM-1 template; the sampler runs it for |program| steps.
  static DescribedSampler ClassicalVm(std::string label, BitTape program, unsigned m,
                                      unsigned n = 1);
  static DescribedSampler QuantumCircuit(std::string label, const qsim::Circuit& circuit,
                                         unsigned n = 1);
  static DescribedSampler ExplicitTable(std::string label, ExplicitDistribution dist,
                                        unsigned m, std::size_t description_length,
                                        unsigned n = 1);

  SamplerKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const BitTape& program() const { return program_; }
  std::size_t description_length() const { return description_length_; }
  const VmBudget& budget() const { return budget_; }
  unsigned m() const { return budget_.m; }
  // Random bits consumed per draw (classical-vm only; seed bits once stretched).
  unsigned randomness_bits() const { return randomness_bits_; }
  const std::optional<qsim::Circuit>& circuit() const { return circuit_; }
  bool is_stretched() const { return stretch_.has_value(); }

  // Computed on first use and shared by copies.
  const ExplicitDistribution& exact_distribution() const;

  // Classical-vm: output for explicit randomness r (|r| == randomness_bits()).
  Outcome RunWithRandomness(const BitTape& r) const;

  Outcome Sample(Rng& rng) const;
  // Index into support_list(); uses the cached exact distribution.
  std::size_t SampleIndex(Rng& rng) const;
  const std::vector<Outcome>& support_list() const;
  // Draws `count` samples into a packed batch. Throws ZeroMassEvent on ⊥.
  SampleBatch SampleBatchOf(std::size_t count, Rng& rng) const;

  friend DescribedSampler prg_stretch(const DescribedSampler& base, unsigned seed_bits,
                                      Expander prg);

 private:
  struct Stretch {
    unsigned seed_bits;
    unsigned base_bits;
    Expander prg;
  };
  struct Lazy;

  DescribedSampler() = default;
  Outcome RunTemplate(const BitTape& r) const;
  ExplicitDistribution ComputeExact() const;
  void InitLazy();

  SamplerKind kind_ = SamplerKind::kExplicitTable;
  std::string label_;
  BitTape program_;
  std::size_t description_length_ = 0;
  VmBudget budget_;
  unsigned randomness_bits_ = 0;
  std::optional<qsim::Circuit> circuit_;
  std::optional<Stretch> stretch_;
  std::shared_ptr<Lazy> lazy_;
};

Outcome sample(const DescribedSampler& sampler, std::uint64_t seed);

// Runs `base` on pseudorandom tape expanded from a seed_bits-bit seed.
// Throws SeedTooLarge if seed_bits > base.randomness_bits(); the identity
// expander needs seed_bits == base.randomness_bits().
DescribedSampler prg_stretch(const DescribedSampler& base, unsigned seed_bits,
                             Expander prg = Expander::kXorshift);

// Uniform over even-parity vs odd-parity m-bit strings: total variation 1,
// identical collision statistics.
std::pair<DescribedSampler, DescribedSampler> far_close_pair(unsigned n_scale);

// Collision-count tester: draws `k` samples and accepts iff the number of
// colliding pairs is within 3 standard deviations of what `reference` predicts.
// Returns the acceptance frequency over `trials` runs.
double CollisionTesterAcceptance(const DescribedSampler& sampler,
                                 const ExplicitDistribution& reference, unsigned k,
                                 unsigned trials, std::uint64_t seed);

// Tuple adversaries.
class TupleAdversary {
 public:
  enum class Strategy { kIid, kCorrelated, kProgram };

  static TupleAdversary Iid(std::string label, DescribedSampler sampler, std::size_t arity);
  // Draws one tuple from an explicit joint.
  static TupleAdversary Correlated(std::string label, JointDistribution joint);
  // Draws one element y from `block` and outputs y repeated `arity` times.
  static TupleAdversary RepeatBlock(std::string label, DescribedSampler block,
                                    std::size_t arity);
  // Uniform choice among fixed tuples.
  static TupleAdversary FixedTuples(std::string label, std::vector<std::vector<BitTape>> tuples);

  const std::string& label() const { return label_; }
  Strategy strategy() const { return strategy_; }
  std::size_t arity() const { return arity_; }
  unsigned m() const { return m_; }

  // A copy with a different arity (iid and repeat-block only).
  TupleAdversary WithArity(std::size_t arity) const;

  std::vector<BitTape> Draw(Rng& rng) const;
  SampleBatch DrawBatch(Rng& rng) const;
  // Exact uniform-index marginal. Never materializes the joint.
  ExplicitDistribution Marginal() const;
  // Exact probability of a tuple under the adversary, as log2.
  double Log2Probability(const std::vector<BitTape>& tuple) const;

 private:
  TupleAdversary() = default;

  std::string label_;
  Strategy strategy_ = Strategy::kIid;
  std::size_t arity_ = 0;
  unsigned m_ = 0;
  std::optional<DescribedSampler> sampler_;
  bool repeat_ = false;
  std::optional<JointDistribution> joint_;
  std::vector<std::vector<BitTape>> fixed_;
  std::vector<SampleBatch> fixed_batches_;
};

// Tuples built so that -log2 p_target(Y) exceeds uK^∞(Y) + alpha by a margin
// in (0.05, 0.95] bits: an exact or one-sided verifier rejects them, while a
// probability oracle allowed to overestimate by one bit accepts. Each tuple is
// a doubled block (a repeated word plus filler) followed by a filler tail,
// with filler biased to the target's first support element so the marginal
// sits at distance >= min_delta. The target must be uniform on its support.
// Throws ZeroMassEvent if the search finds fewer than `count` tuples.
TupleAdversary NearThresholdAdversary(const DescribedSampler& target, std::size_t s,
                                      double alpha, double min_delta, std::size_t count,
                                      std::uint64_t seed);

// Toy quantum advantage sampler relative to classical budget t_C.
struct ToyQasConfig {
  qsim::Circuit circuit;
  unsigned t_classical = 12;
  std::string label = "toy_qas";
};

struct ToyQas {
  DescribedSampler sampler;
  unsigned t_classical;
  // Minimum over every classical-vm sampler whose template has t_classical
  // bits of the total variation distance to the quantum sampler.
  double certificate;
  std::string closest_template_hex;
};

// Throws BudgetTooLarge if t_classical > bitvm::kTMax.
ToyQas toy_qas(const ToyQasConfig& config);

// Every t-bit classical-vm template, m-bit outputs.
std::vector<DescribedSampler> ClassicalFamily(unsigned t, unsigned m);

// Corpus I/O: JSON array of {kind, program_hex, budget:{n,t,m}, label, ...}.
std::vector<DescribedSampler> LoadCorpus(const std::string& path);
std::vector<DescribedSampler> ParseCorpus(const std::string& json_text);
std::string SerializeCorpus(const std::vector<DescribedSampler>& corpus);
// The built-in corpus v1.
std::vector<DescribedSampler> CorpusV1();
const DescribedSampler& FindSampler(const std::vector<DescribedSampler>& corpus,
                                    const std::string& label);

}  // namespace kolmoverify::samplers

#endif  // KOLMOVERIFY_SAMPLERS_HPP_
