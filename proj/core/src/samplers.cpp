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

#include "kolmoverify/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <bit>
#include <limits>
#include <mutex>
#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "kolmoverify/errors.hpp"

namespace kolmoverify::samplers {

using nlohmann::json;

struct DescribedSampler::Lazy {
  std::once_flag once;
  ExplicitDistribution dist;
  std::vector<Outcome> outcomes;
  std::vector<double> cdf;
  std::vector<std::int64_t> codes;  // -1 for ⊥
};

namespace {

unsigned CountWildcards(const BitTape& program) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 4 <= program.size(); i += 4) {
    const unsigned nib = static_cast<unsigned>(program.slice(i, 4).ToInteger());
    if (nib == kRandEmit || nib == kRandDbl) ++count;
  }
  return count;
}

std::uint64_t XorshiftNext(std::uint64_t& s) {
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  return s * 0x2545F4914F6CDD1DULL;
}

}  // namespace

std::string ToString(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kClassicalVm:
      return "classical-vm";
    case SamplerKind::kQuantumCircuit:
      return "quantum-circuit-program";
    case SamplerKind::kExplicitTable:
      return "explicit-table";
  }
  return "?";
}

SamplerKind ParseSamplerKind(const std::string& s) {
  if (s == "classical-vm") return SamplerKind::kClassicalVm;
  if (s == "quantum-circuit-program") return SamplerKind::kQuantumCircuit;
  if (s == "explicit-table") return SamplerKind::kExplicitTable;
  throw ParseError("unknown sampler kind: " + s);
}

BitTape Expand(Expander prg, std::uint64_t seed, unsigned seed_bits, unsigned out_bits) {
  const std::uint64_t mask = seed_bits >= 64 ? ~0ULL : ((1ULL << seed_bits) - 1);
  seed &= mask;
  if (prg == Expander::kIdentity) {
    if (seed_bits != out_bits) throw std::invalid_argument("identity expander needs equal lengths");
    return BitTape::FromInteger(seed, out_bits);
  }
  std::uint64_t state = Mix64(seed ^ 0x9E3779B97F4A7C15ULL) | 1;
  BitTape out;
  for (unsigned i = 0; i < out_bits; ++i) out.push_back((XorshiftNext(state) >> 63) != 0);
  return out;
}

BitTape SampleBatch::Concatenated() const {
  BitTape out;
  for (std::uint32_t c : codes) {
    for (unsigned b = m; b-- > 0;) out.push_back(((c >> b) & 1u) != 0);
  }
  return out;
}

std::vector<BitTape> SampleBatch::ToTapes() const {
  std::vector<BitTape> out;
  out.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) out.push_back(at(i));
  return out;
}

SampleBatch SampleBatch::FromTapes(const std::vector<BitTape>& tuple) {
  SampleBatch b;
  if (tuple.empty()) return b;
  b.m = static_cast<unsigned>(tuple[0].size());
  if (b.m > 32) throw std::invalid_argument("SampleBatch holds at most 32-bit strings");
  for (const auto& x : tuple) {
    if (x.size() != b.m) throw WrongArity("tuple elements differ in length");
    b.codes.push_back(static_cast<std::uint32_t>(x.ToInteger()));
  }
  return b;
}

void DescribedSampler::InitLazy() { lazy_ = std::make_shared<Lazy>(); }

DescribedSampler DescribedSampler::ClassicalVm(std::string label, BitTape program, unsigned m,
                                               unsigned n) {
  DescribedSampler d;
  d.kind_ = SamplerKind::kClassicalVm;
  d.label_ = std::move(label);
  d.program_ = std::move(program);
  d.description_length_ = d.program_.size();
  d.budget_ = {n, static_cast<unsigned>(d.program_.size()), m};
  d.budget_.Validate();
  d.randomness_bits_ = CountWildcards(d.program_);
  if (d.randomness_bits_ > kMaxRandomBits) throw BudgetTooLarge("template uses too many random bits");
  d.InitLazy();
  return d;
}

DescribedSampler DescribedSampler::QuantumCircuit(std::string label, const qsim::Circuit& circuit,
                                                  unsigned n) {
  if (circuit.qubit_count > qsim::kQMax) throw TooManyQubits("circuit exceeds Q_MAX");
  DescribedSampler d;
  d.kind_ = SamplerKind::kQuantumCircuit;
  d.label_ = std::move(label);
  d.circuit_ = circuit;
  d.program_ = qsim::encode_circuit(circuit);
  d.description_length_ = d.program_.size();
  d.budget_ = {n, static_cast<unsigned>(d.program_.size()), circuit.qubit_count};
  d.InitLazy();
  return d;
}

DescribedSampler DescribedSampler::ExplicitTable(std::string label, ExplicitDistribution dist,
                                                 unsigned m, std::size_t description_length,
                                                 unsigned n) {
  for (const auto& [x, p] : dist.entries()) {
    if (!x.is_bottom() && x.value().size() != m) {
      throw std::invalid_argument("table outcome of wrong length");
    }
  }
  DescribedSampler d;
  d.kind_ = SamplerKind::kExplicitTable;
  d.label_ = std::move(label);
  d.description_length_ = description_length;
  d.budget_ = {n, 1, m};
  d.InitLazy();
  std::call_once(d.lazy_->once, [&] { d.lazy_->dist = std::move(dist); });
  return d;
}

Outcome DescribedSampler::RunTemplate(const BitTape& r) const {
  BitTape tape = program_;
  std::size_t used = 0;
  for (std::size_t i = 0; i + 4 <= tape.size(); i += 4) {
    const unsigned nib = static_cast<unsigned>(tape.slice(i, 4).ToInteger());
    if (nib != kRandEmit && nib != kRandDbl) continue;
    const bool bit = r[used++];
    unsigned op;
    if (nib == kRandEmit) {
      op = bit ? static_cast<unsigned>(bitvm::kEmit1) : static_cast<unsigned>(bitvm::kEmit0);
    } else {
      op = bit ? static_cast<unsigned>(bitvm::kDbl) : 4u;  // 4 is the first NOP
    }
    for (unsigned b = 0; b < 4; ++b) tape.set(i + b, ((op >> (3 - b)) & 1u) != 0);
  }
  return bitvm::run_vm(tape, budget_);
}

Outcome DescribedSampler::RunWithRandomness(const BitTape& r) const {
  if (kind_ != SamplerKind::kClassicalVm) throw UnsupportedSpec("not a classical-vm sampler");
  if (r.size() != randomness_bits_) throw std::invalid_argument("randomness length mismatch");
  if (stretch_) return RunTemplate(Expand(stretch_->prg, r.ToInteger(), stretch_->seed_bits,
                                          stretch_->base_bits));
  return RunTemplate(r);
}

ExplicitDistribution DescribedSampler::ComputeExact() const {
  if (kind_ == SamplerKind::kQuantumCircuit) return qsim::simulate(*circuit_, budget_.m);
  std::map<Outcome, Rational> acc;
  const std::uint64_t count = std::uint64_t{1} << randomness_bits_;
  const Rational each(1, BigInt(count));
  for (std::uint64_t r = 0; r < count; ++r) {
    acc[RunWithRandomness(BitTape::FromInteger(r, randomness_bits_))] += each;
  }
  return ExplicitDistribution::FromExact(std::move(acc));
}

const ExplicitDistribution& DescribedSampler::exact_distribution() const {
  std::call_once(lazy_->once, [this] { lazy_->dist = ComputeExact(); });
  return lazy_->dist;
}

const std::vector<Outcome>& DescribedSampler::support_list() const {
  const ExplicitDistribution& d = exact_distribution();
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (lazy_->outcomes.empty()) {
    long double acc = 0;
    for (const auto& [x, p] : d.entries()) {
      lazy_->outcomes.push_back(x);
      lazy_->codes.push_back(x.is_bottom() || x.value().size() > 32
                                 ? -1
                                 : static_cast<std::int64_t>(x.value().ToInteger()));
      acc += p;
      lazy_->cdf.push_back(static_cast<double>(acc));
    }
    lazy_->cdf.back() = 1.0;
  }
  return lazy_->outcomes;
}

std::size_t DescribedSampler::SampleIndex(Rng& rng) const {
  support_list();
  const double u = rng.uniform();
  const auto it = std::upper_bound(lazy_->cdf.begin(), lazy_->cdf.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - lazy_->cdf.begin()),
                               lazy_->cdf.size() - 1);
}

SampleBatch DescribedSampler::SampleBatchOf(std::size_t count, Rng& rng) const {
  support_list();
  if (m() > 32) throw std::invalid_argument("SampleBatch holds at most 32-bit strings");
  SampleBatch b;
  b.m = m();
  b.codes.resize(count);
  const std::vector<double>& cdf = lazy_->cdf;
  const std::vector<std::int64_t>& codes = lazy_->codes;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform();
    std::size_t idx = 0;
    if (cdf.size() <= 16) {
      // Branch-free scan; the binary search mispredicts on tiny supports.
      for (double c : cdf) idx += static_cast<std::size_t>(c <= u);
    } else {
      idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    idx = std::min(idx, cdf.size() - 1);
    if (codes[idx] < 0) throw ZeroMassEvent(label_ + " produced ⊥");
    b.codes[i] = static_cast<std::uint32_t>(codes[idx]);
  }
  return b;
}

Outcome DescribedSampler::Sample(Rng& rng) const {
  if (kind_ == SamplerKind::kClassicalVm) {
    BitTape r;
    for (unsigned i = 0; i < randomness_bits_; ++i) r.push_back(rng.bit());
    return RunWithRandomness(r);
  }
  return support_list()[SampleIndex(rng)];
}

Outcome sample(const DescribedSampler& sampler, std::uint64_t seed) {
  Rng rng(seed);
  return sampler.Sample(rng);
}

DescribedSampler prg_stretch(const DescribedSampler& base, unsigned seed_bits, Expander prg) {
  if (base.kind() != SamplerKind::kClassicalVm || base.is_stretched()) {
    throw UnsupportedSpec("prg_stretch needs a randomness-explicit classical-vm sampler");
  }
  const unsigned l = base.randomness_bits();
  const bool identity_ok = prg == Expander::kIdentity && seed_bits == l;
  if (seed_bits >= l && !identity_ok) throw SeedTooLarge("seed_bits must be below the base randomness");
  if (prg == Expander::kIdentity && !identity_ok) {
    throw std::invalid_argument("identity expander needs seed_bits == randomness bits");
  }
  DescribedSampler d = base;
  d.label_ = base.label() + "+prg" + std::to_string(seed_bits);
  d.stretch_ = DescribedSampler::Stretch{seed_bits, l, prg};
  d.randomness_bits_ = seed_bits;
  d.InitLazy();
  return d;
}

std::pair<DescribedSampler, DescribedSampler> far_close_pair(unsigned n_scale) {
  const unsigned m = std::max(2u, n_scale);
  if (m > 16) throw BudgetTooLarge("far_close_pair: n_scale too large");
  std::map<Outcome, Rational> even, odd;
  const Rational each(1, BigInt(std::uint64_t{1} << (m - 1)));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    const Outcome x(BitTape::FromInteger(v, m));
    (std::popcount(v) % 2 == 0 ? even : odd)[x] = each;
  }
  const std::size_t dl = std::size_t{8} + m;  // parity bit + length
  return {DescribedSampler::ExplicitTable("parity_even" + std::to_string(m),
                                          ExplicitDistribution::FromExact(even), m, dl),
          DescribedSampler::ExplicitTable("parity_odd" + std::to_string(m),
                                          ExplicitDistribution::FromExact(odd), m, dl)};
}

double CollisionTesterAcceptance(const DescribedSampler& sampler,
                                 const ExplicitDistribution& reference, unsigned k,
                                 unsigned trials, std::uint64_t seed) {
  double norm2 = 0;
  for (const auto& [x, p] : reference.entries()) norm2 += p * p;
  const double pairs = 0.5 * k * (k - 1.0);
  const double expected = pairs * norm2;
  const double slack = 3.0 * std::sqrt(expected) + 1.0;
  unsigned accepted = 0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rng rng(DeriveSeed(seed, trial));
    std::map<std::size_t, unsigned> counts;
    for (unsigned i = 0; i < k; ++i) ++counts[sampler.SampleIndex(rng)];
    double collisions = 0;
    for (const auto& [idx, c] : counts) collisions += 0.5 * c * (c - 1.0);
    if (std::abs(collisions - expected) <= slack) ++accepted;
  }
  return static_cast<double>(accepted) / trials;
}

// ---------------------------------------------------------------------------

TupleAdversary TupleAdversary::Iid(std::string label, DescribedSampler sampler, std::size_t arity) {
  TupleAdversary a;
  a.label_ = std::move(label);
  a.strategy_ = Strategy::kIid;
  a.arity_ = arity;
  a.m_ = sampler.m();
  a.sampler_ = std::move(sampler);
  return a;
}

TupleAdversary TupleAdversary::RepeatBlock(std::string label, DescribedSampler block,
                                           std::size_t arity) {
  TupleAdversary a = Iid(std::move(label), std::move(block), arity);
  a.strategy_ = Strategy::kProgram;
  a.repeat_ = true;
  return a;
}

TupleAdversary TupleAdversary::Correlated(std::string label, JointDistribution joint) {
  TupleAdversary a;
  a.label_ = std::move(label);
  a.strategy_ = Strategy::kCorrelated;
  a.arity_ = joint.arity();
  const auto& first = joint.dist().entries().begin()->first;
  a.m_ = first.at(0).is_bottom() ? 0 : static_cast<unsigned>(first.at(0).value().size());
  for (const auto& [t, p] : joint.dist().entries()) {
    for (const auto& x : t) {
      if (x.is_bottom() || x.value().size() != a.m_) {
        throw WrongArity("correlated adversary tuples must hold equal-length strings");
      }
    }
  }
  a.joint_ = std::move(joint);
  return a;
}

TupleAdversary TupleAdversary::FixedTuples(std::string label,
                                           std::vector<std::vector<BitTape>> tuples) {
  if (tuples.empty()) throw std::invalid_argument("no tuples");
  TupleAdversary a;
  a.label_ = std::move(label);
  a.strategy_ = Strategy::kProgram;
  a.arity_ = tuples[0].size();
  a.m_ = static_cast<unsigned>(tuples[0].at(0).size());
  for (const auto& t : tuples) {
    if (t.size() != a.arity_) throw WrongArity("fixed tuples differ in arity");
    for (const auto& x : t) {
      if (x.size() != a.m_) throw WrongArity("fixed tuples differ in element length");
    }
  }
  if (a.m_ <= 32) {
    for (const auto& t : tuples) a.fixed_batches_.push_back(SampleBatch::FromTapes(t));
  }
  a.fixed_ = std::move(tuples);
  return a;
}

TupleAdversary TupleAdversary::WithArity(std::size_t arity) const {
  if (!sampler_) throw UnsupportedSpec("arity is fixed for this adversary");
  TupleAdversary a = *this;
  a.arity_ = arity;
  return a;
}

std::vector<BitTape> TupleAdversary::Draw(Rng& rng) const {
  std::vector<BitTape> out;
  out.reserve(arity_);
  auto value = [&](const Outcome& o) {
    if (o.is_bottom()) throw ZeroMassEvent("adversary sampler produced ⊥");
    return o.value();
  };
  if (fixed_.size()) return fixed_[rng.below(fixed_.size())];
  if (joint_) {
    double u = rng.uniform(), acc = 0;
    const Tuple* pick = nullptr;
    for (const auto& [t, p] : joint_->dist().entries()) {
      pick = &t;
      acc += p;
      if (u < acc) break;
    }
    for (const auto& x : *pick) out.push_back(value(x));
    return out;
  }
  const auto& support = sampler_->support_list();
  if (repeat_) {
    const BitTape y = value(support[sampler_->SampleIndex(rng)]);
    out.assign(arity_, y);
    return out;
  }
  for (std::size_t i = 0; i < arity_; ++i) out.push_back(value(support[sampler_->SampleIndex(rng)]));
  return out;
}

SampleBatch TupleAdversary::DrawBatch(Rng& rng) const {
  if (sampler_ && !repeat_) return sampler_->SampleBatchOf(arity_, rng);
  if (sampler_) {
    SampleBatch one = sampler_->SampleBatchOf(1, rng);
    one.codes.assign(arity_, one.codes[0]);
    return one;
  }
  if (!fixed_batches_.empty()) return fixed_batches_[rng.below(fixed_batches_.size())];
  return SampleBatch::FromTapes(Draw(rng));
}

ExplicitDistribution TupleAdversary::Marginal() const {
  if (sampler_) return sampler_->exact_distribution();
  if (joint_) return marginal_mixture(*joint_);
  std::map<Outcome, Rational> acc;
  const Rational w(1, BigInt(fixed_.size() * arity_));
  for (const auto& t : fixed_) {
    for (const auto& x : t) acc[Outcome(x)] += w;
  }
  return ExplicitDistribution::FromExact(std::move(acc));
}

double TupleAdversary::Log2Probability(const std::vector<BitTape>& tuple) const {
  if (tuple.size() != arity_) throw WrongArity("tuple arity mismatch");
  const double neg_inf = -std::numeric_limits<double>::infinity();
  if (!fixed_.empty()) {
    const auto c = std::count(fixed_.begin(), fixed_.end(), tuple);
    return c == 0 ? neg_inf : std::log2(static_cast<double>(c) / fixed_.size());
  }
  if (joint_) {
    Tuple t;
    for (const auto& x : tuple) t.emplace_back(x);
    const double p = joint_->prob(t);
    return p > 0 ? std::log2(p) : neg_inf;
  }
  const auto& d = sampler_->exact_distribution();
  if (repeat_) {
    for (const auto& x : tuple) {
      if (x != tuple[0]) return neg_inf;
    }
    const double p = d.prob(Outcome(tuple[0]));
    return p > 0 ? std::log2(p) : neg_inf;
  }
  double total = 0;
  for (const auto& x : tuple) {
    const double p = d.prob(Outcome(x));
    if (p <= 0) return neg_inf;
    total += std::log2(p);
  }
  return total;
}

TupleAdversary NearThresholdAdversary(const DescribedSampler& target, std::size_t s,
                                      double alpha, double min_delta, std::size_t count,
                                      std::uint64_t seed) {
  const ExplicitDistribution& d = target.exact_distribution();
  std::vector<BitTape> support;
  for (const auto& [x, p] : d.exact_entries()) {
    if (x.is_bottom()) throw UnsupportedSpec("near-threshold target must not emit ⊥");
    if (p != d.exact_entries().begin()->second) {
      throw UnsupportedSpec("near-threshold target must be uniform on its support");
    }
    support.push_back(x.value());
  }
  const double h = -std::log2(d.entries().begin()->second);
  const double neg_log_p = h * static_cast<double>(s);
  const double per_element = 2.0 * target.m();  // uK^∞ cost of one filler element
  const std::size_t k = support.size();

  std::vector<std::vector<BitTape>> found;
  auto filler = [&](Rng& rng) -> const BitTape& {
    return (k == 1 || rng.uniform() < 0.8) ? support[0] : support[1 + rng.below(k - 1)];
  };
  for (unsigned len = 1; len <= 8 && found.size() < count; ++len) {
    std::vector<std::size_t> word(len, 0);
    const std::uint64_t words = static_cast<std::uint64_t>(std::pow(k, len));
    for (std::uint64_t w = 0; w < words && found.size() < count; ++w) {
      std::uint64_t rest = w;
      std::size_t off_first = 0;
      for (auto& e : word) {
        e = rest % k;
        rest /= k;
        off_first += e != 0;
      }
      if (4 * off_first > len) continue;
      // Doubled block P P with P = word^(2^j) + e filler elements, then a
      // tail; uK^∞ ~ cost(word^(2^j)) + per_element·(s - 2a - e).
      const double target_cost = neg_log_p - alpha;
      const double free_elems = static_cast<double>(s) - target_cost / per_element;
      if (free_elems < 2.0 * len) continue;
      unsigned j = 0;
      while (static_cast<double>(len) * std::pow(2.0, j + 1) <= free_elems / 2) ++j;
      const std::size_t a = static_cast<std::size_t>(len) << j;
      const double base = free_elems - 2.0 * static_cast<double>(a);
      const std::size_t lo = base > 40 ? static_cast<std::size_t>(base) - 40 : 0;
      for (std::size_t e = lo; e < lo + 80 && found.size() < count; ++e) {
        if (2 * (a + e) > s) break;
        Rng rng(DeriveSeed(seed, (w << 20) ^ (static_cast<std::uint64_t>(len) << 16) ^ e));
        std::vector<BitTape> block;
        for (std::size_t r = 0; r < (std::size_t{1} << j); ++r) {
          for (std::size_t i : word) block.push_back(support[i]);
        }
        for (std::size_t i = 0; i < e; ++i) block.push_back(filler(rng));
        std::vector<BitTape> tuple = block;
        tuple.insert(tuple.end(), block.begin(), block.end());
        while (tuple.size() < s) tuple.push_back(filler(rng));
        const double g = neg_log_p - bitvm::uKt_unbounded(Concatenate(tuple)) - alpha;
        if (!(g > 0.05 && g <= 0.95)) continue;
        const auto marginal = TupleAdversary::FixedTuples("probe", {tuple}).Marginal();
        if (tv_distance(marginal, d) < min_delta) continue;
        found.push_back(std::move(tuple));
      }
    }
  }
  if (found.size() < count) throw ZeroMassEvent("near-threshold search came up short");
  return TupleAdversary::FixedTuples("near_threshold(" + target.label() + ")", std::move(found));
}

// ---------------------------------------------------------------------------

std::vector<DescribedSampler> ClassicalFamily(unsigned t, unsigned m) {
  if (t > bitvm::kTMax) throw BudgetTooLarge("classical family exceeds T_MAX");
  std::vector<DescribedSampler> out;
  out.reserve(std::size_t{1} << t);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << t); ++v) {
    out.push_back(DescribedSampler::ClassicalVm("tmpl:" + BitTape::FromInteger(v, t).ToHex(),
                                                BitTape::FromInteger(v, t), m));
  }
  return out;
}

ToyQas toy_qas(const ToyQasConfig& config) {
  if (config.t_classical > bitvm::kTMax) throw BudgetTooLarge("t_C exceeds T_MAX");
  DescribedSampler q = DescribedSampler::QuantumCircuit(config.label, config.circuit);
  const ExplicitDistribution& dq = q.exact_distribution();
  double best = 2.0;
  std::string best_hex;
  for (const auto& c : ClassicalFamily(config.t_classical, q.m())) {
    const double d = tv_distance(dq, c.exact_distribution());
    if (d < best) {
      best = d;
      best_hex = c.program().ToHex();
    }
  }
  return {std::move(q), config.t_classical, best, best_hex};
}

// ---------------------------------------------------------------------------

namespace {

std::string RationalString(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

Rational ParseRational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

json ToJson(const DescribedSampler& d) {
  json j;
  j["label"] = d.label();
  j["kind"] = ToString(d.kind());
  j["program_hex"] = d.kind() == SamplerKind::kExplicitTable ? "" : d.program().ToHex();
  j["budget"] = {{"n", d.budget().n}, {"t", d.budget().t}, {"m", d.budget().m}};
  j["description_length"] = d.description_length();
  if (d.kind() == SamplerKind::kQuantumCircuit) j["circuit"] = qsim::FormatCircuitText(*d.circuit());
  if (d.kind() == SamplerKind::kClassicalVm) j["random_bits"] = d.randomness_bits();
  if (d.kind() == SamplerKind::kExplicitTable) {
    json table = json::object();
    for (const auto& [x, p] : d.exact_distribution().exact_entries()) {
      table[x.ToString()] = RationalString(p);
    }
    j["table"] = table;
  }
  return j;
}

DescribedSampler FromJson(const json& j) {
  const SamplerKind kind = ParseSamplerKind(j.at("kind").get<std::string>());
  const std::string label = j.at("label").get<std::string>();
  const auto& b = j.at("budget");
  const unsigned n = b.at("n").get<unsigned>();
  const unsigned m = b.at("m").get<unsigned>();
  switch (kind) {
    case SamplerKind::kClassicalVm: {
      auto d = DescribedSampler::ClassicalVm(
          label, BitTape::FromHex(j.at("program_hex").get<std::string>()), m, n);
      if (d.budget().t != b.at("t").get<unsigned>()) throw ParseError(label + ": budget.t != |program|");
      return d;
    }
    case SamplerKind::kQuantumCircuit: {
      const BitTape prog = BitTape::FromHex(j.at("program_hex").get<std::string>());
      const auto enc = qsim::decode_circuit(prog, {n, static_cast<unsigned>(prog.size()), m});
      if (!enc.decoded) throw ParseError(label + ": undecodable circuit program");
      return DescribedSampler::QuantumCircuit(label, *enc.decoded, n);
    }
    case SamplerKind::kExplicitTable: {
      std::map<Outcome, Rational> table;
      for (const auto& [k, v] : j.at("table").items()) {
        table[Outcome::Parse(k)] = ParseRational(v.get<std::string>());
      }
      return DescribedSampler::ExplicitTable(label, ExplicitDistribution::FromExact(table), m,
                                             j.at("description_length").get<std::size_t>(), n);
    }
  }
  throw ParseError("unreachable");
}

DescribedSampler Template(const std::string& label, const std::string& nibbles, unsigned m) {
  std::string bits;
  for (char c : nibbles) {
    if (c != ' ') bits.push_back(c);
  }
  return DescribedSampler::ClassicalVm(label, BitTape::FromString(bits), m);
}

DescribedSampler Table(const std::string& label, std::map<std::string, Rational> t, unsigned m) {
  std::map<Outcome, Rational> table;
  for (auto& [k, v] : t) table[Outcome::Parse(k)] = v;
  // |D|: each entry stores m outcome bits and an 8-bit dyadic weight.
  const std::size_t dl = t.size() * (m + 8);
  return DescribedSampler::ExplicitTable(label, ExplicitDistribution::FromExact(table), m, dl);
}

}  // namespace

std::vector<DescribedSampler> ParseCorpus(const std::string& json_text) {
  const json j = json::parse(json_text);
  std::vector<DescribedSampler> out;
  for (const auto& e : j) out.push_back(FromJson(e));
  return out;
}

std::vector<DescribedSampler> LoadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCorpus(ss.str());
}

std::string SerializeCorpus(const std::vector<DescribedSampler>& corpus) {
  json j = json::array();
  for (const auto& d : corpus) j.push_back(ToJson(d));
  return j.dump(2) + "\n";
}

std::vector<DescribedSampler> CorpusV1() {
  using qsim::ParseCircuitText;
  const Rational h(1, 2), q(1, 4), e(1, 8);
  std::vector<DescribedSampler> c;
  c.push_back(Template("point0", "0001 0000", 1));
  c.push_back(Template("point01", "0001 0010 0000", 2));
  c.push_back(Template("point1111", "0010 0011 0011 0000", 4));
  c.push_back(Template("uniform1", "1111 0000", 1));
  c.push_back(Template("uniform2", "1111 1111 0000", 2));
  c.push_back(Template("uniform3", "1111 1111 1111 0000", 3));
  c.push_back(Template("uniform4", "1111 1111 1111 1111 0000", 4));
  c.push_back(Template("half2", "0001 1111 0000", 2));
  c.push_back(Template("repeat2", "1111 0011 0000", 2));
  c.push_back(Template("uniform8", "1111 1111 1111 1111 1111 1111 1111 1111 0000", 8));
  c.push_back(DescribedSampler::QuantumCircuit("q_zero1", ParseCircuitText("q 1\nend")));
  c.push_back(DescribedSampler::QuantumCircuit("q_plus", ParseCircuitText("q 1\nh 0\nend")));
  c.push_back(DescribedSampler::QuantumCircuit("q_plus2", ParseCircuitText("q 2\nh 0\nh 1\nend")));
  c.push_back(DescribedSampler::QuantumCircuit("q_bell",
                                               ParseCircuitText("q 2\nh 0\ncx 0 1\nend")));
  c.push_back(DescribedSampler::QuantumCircuit(
      "q_h3of4", ParseCircuitText("q 4\nh 0\nh 1\nh 2\nend")));
  c.push_back(Table("bern_quarter", {{"0", 1 - q}, {"1", q}}, 1));
  c.push_back(Table("skewed2", {{"00", h}, {"01", q}, {"10", e}, {"11", e}}, 2));
  auto [even, odd] = far_close_pair(4);
  c.push_back(even);
  c.push_back(odd);
  return c;
}

const DescribedSampler& FindSampler(const std::vector<DescribedSampler>& corpus,
                                    const std::string& label) {
  for (const auto& d : corpus) {
    if (d.label() == label) return d;
  }
  throw std::invalid_argument("unknown sampler: " + label);
}

}  // namespace kolmoverify::samplers
