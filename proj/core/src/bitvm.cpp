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

#include "kolmoverify/bitvm.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "kolmoverify/errors.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify::bitvm {

namespace {

// Output buffer of at most 63 bits: `len` bits stored in the low bits of
// `bits`, first bit most significant.
struct SmallBuf {
  unsigned len = 0;
  std::uint64_t bits = 0;
};

// Applies one opcode. Returns false once the buffer exceeds `cap` bits.
inline bool Step(SmallBuf& b, unsigned op, unsigned cap) {
  switch (op) {
    case kEmit0:
    case kEmit1:
      if (b.len + 1 > cap) return false;
      b.bits = (b.bits << 1) | (op == kEmit1 ? 1u : 0u);
      ++b.len;
      return true;
    case kDbl:
      if (b.len == 0) return true;
      if (2 * b.len > cap) return false;
      b.bits = (b.bits << b.len) | b.bits;
      b.len *= 2;
      return true;
    default:
      return true;
  }
}

// Index of a buffer of length <= 31 in a dense table: (1 << len) | bits.
inline std::uint64_t DenseIndex(const SmallBuf& b) { return (std::uint64_t{1} << b.len) | b.bits; }

std::vector<BigInt> ComputeSkeletonWeights(unsigned n_ops, bool prefix) {
  // row[k] for the current number of opcodes j, built from j-1.
  std::vector<BigInt> row(n_ops + 1, 0);
  row[0] = 1;  // j = 0
  BigInt pow16 = 1;
  for (unsigned j = 1; j <= n_ops; ++j) {
    std::vector<BigInt> next(n_ops + 1, 0);
    // Either the first opcode is a NOP, or it is the first skeleton op.
    for (unsigned k = 0; k <= j; ++k) {
      next[k] = row[k] * kNopCount;
      if (k >= 1) next[k] += row[k - 1];
    }
    if (prefix) {
      next[0] = pow16 * 16;
    } else {
      // Empty skeleton: all NOPs, or HALT first followed by anything.
      next[0] = row[0] * kNopCount + pow16;
    }
    pow16 *= 16;
    row.swap(next);
  }
  return row;
}

const std::vector<BigInt>& SkeletonTable(unsigned n_ops, bool prefix) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, bool>, std::unique_ptr<std::vector<BigInt>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n_ops, prefix}];
  if (!slot) slot = std::make_unique<std::vector<BigInt>>(ComputeSkeletonWeights(n_ops, prefix));
  return *slot;
}

// z[i] = length of the longest common prefix of x and x[i..].
std::vector<std::size_t> ZFunction(const BitTape& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && x[z[i]] == x[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

// For each prefix length l in [1, |x|/2]: may DBL extend prefix l to 2l?
std::vector<char> DoublingTable(const BitTape& x) {
  const std::size_t n = x.size();
  std::vector<char> ok(n + 1, 0);
  auto z = ZFunction(x);
  for (std::size_t l = 1; 2 * l <= n; ++l) ok[l] = z[l] >= l;
  return ok;
}

std::string CacheKey(const VmBudget& b, const Mode& m) {
  std::ostringstream os;
  os << b.n << '/' << b.t << '/' << b.m << '/' << m.ToString();
  return os.str();
}

std::map<Outcome, BigInt> TallySampled(const VmBudget& budget, const Mode& mode) {
  std::map<Outcome, BigInt> tally;
  Rng rng(mode.seed);
  const unsigned t = budget.t;
  for (std::uint64_t s = 0; s < mode.sample_count; ++s) {
    BitTape tape(t);
    if (mode.policy == SeedPolicy::kEnumerate) {
      if (t > 63) throw BudgetTooLarge("enumerate policy needs t <= 63");
      std::uint64_t v = s & ((std::uint64_t{1} << t) - 1);
      tape = BitTape::FromInteger(v, t);
    } else {
      for (unsigned i = 0; i < t; ++i) tape.set(i, rng.bit());
    }
    tally[run_vm(tape, budget)] += 1;
  }
  return tally;
}

}  // namespace

void VmBudget::Validate() const {
  if (n < 1 || t < 1 || m < 1) throw std::invalid_argument("budget needs n, t, m >= 1");
}

std::string Mode::ToString() const {
  switch (kind) {
    case Kind::kExact:
      return "exact";
    case Kind::kCounted:
      return "counted";
    case Kind::kSampled: {
      std::ostringstream os;
      os << "sampled(" << sample_count << ","
         << (policy == SeedPolicy::kEnumerate ? std::string("enumerate") : std::to_string(seed))
         << ")";
      return os.str();
    }
  }
  return "?";
}

RawRun execute(const BitTape& tape, unsigned t, std::size_t cap) {
  RawRun run;
  const std::size_t n_ops = std::min<std::size_t>(t, tape.size()) / kStepsPerOpcode;
  auto& out = run.output;
  for (std::size_t j = 0; j < n_ops; ++j) {
    const std::size_t base = j * kStepsPerOpcode;
    unsigned op = (tape[base] << 3) | (tape[base + 1] << 2) | (tape[base + 2] << 1) | tape[base + 3];
    ++run.opcodes_executed;
    if (op == kHalt) break;
    if (op == kEmit0 || op == kEmit1) {
      if (out.size() + 1 > cap) {
        run.overflow = true;
        break;
      }
      out.push_back(op == kEmit1);
    } else if (op == kDbl) {
      const std::size_t len = out.size();
      for (std::size_t i = 0; i < len; ++i) {
        if (out.size() >= cap) {
          run.overflow = true;
          break;
        }
        out.push_back(out[i]);
      }
      if (run.overflow) break;
    }
  }
  return run;
}

Outcome run_vm(const BitTape& tape, const VmBudget& budget) {
  budget.Validate();
  if (tape.size() != budget.t) throw std::invalid_argument("tape length must equal budget.t");
  RawRun run = execute(tape, budget.t, budget.m);
  if (run.overflow || run.output.size() != budget.m) return Outcome::Bottom();
  return Outcome(std::move(run.output));
}

BigInt SkeletonWeight(unsigned opcodes, unsigned k) {
  if (k > opcodes) return 0;
  return SkeletonTable(opcodes, false)[k];
}

BigInt SkeletonPrefixWeight(unsigned opcodes, unsigned k) {
  if (k > opcodes) return 0;
  return SkeletonTable(opcodes, true)[k];
}

std::map<Outcome, BigInt> TallyByEnumeration(const VmBudget& budget) {
  budget.Validate();
  if (budget.t > kTMax) throw BudgetTooLarge("exact enumeration needs t <= " + std::to_string(kTMax));
  const unsigned n_ops = budget.t / kStepsPerOpcode;
  const unsigned spare = budget.t % kStepsPerOpcode;
  const unsigned m = budget.m;
  // With at most 6 opcodes no output exceeds 32 bits.
  const unsigned cap = std::min(m, 40u);
  std::vector<std::uint64_t> hits(m <= 16 ? (std::size_t{1} << m) : 0, 0);
  std::unordered_map<std::uint64_t, std::uint64_t> sparse;
  const std::uint64_t tapes = std::uint64_t{1} << (4 * n_ops);
  for (std::uint64_t tape = 0; tape < tapes; ++tape) {
    SmallBuf b;
    bool ok = true;
    for (unsigned j = 0; j < n_ops; ++j) {
      unsigned op = static_cast<unsigned>(tape >> (4 * (n_ops - 1 - j))) & 15u;
      if (op == kHalt) break;
      if (!Step(b, op, cap)) {
        ok = false;
        break;
      }
    }
    if (!ok || b.len != m) continue;
    if (!hits.empty()) ++hits[b.bits];
    else ++sparse[b.bits];
  }
  std::map<Outcome, BigInt> tally;
  BigInt reached = 0;
  auto record = [&](std::uint64_t bits, std::uint64_t count) {
    BigInt c = BigInt(count) << spare;
    reached += c;
    tally.emplace(Outcome(BitTape::FromInteger(bits, m)), c);
  };
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i]) record(i, hits[i]);
  }
  for (const auto& [bits, count] : sparse) record(bits, count);
  BigInt bottom = Pow2(budget.t) - reached;
  if (bottom > 0) tally.emplace(Outcome::Bottom(), bottom);
  return tally;
}

std::map<Outcome, BigInt> TallyBySkeleton(const VmBudget& budget) {
  budget.Validate();
  if (budget.t > kTCountedMax) throw BudgetTooLarge("counted mode needs t <= " + std::to_string(kTCountedMax));
  if (budget.m > kCountedMaxM) throw BudgetTooLarge("counted distribution needs m <= " + std::to_string(kCountedMaxM));
  const unsigned n_ops = budget.t / kStepsPerOpcode;
  const unsigned spare = budget.t % kStepsPerOpcode;
  const unsigned m = budget.m;
  const auto& weights = SkeletonTable(n_ops, false);

  // layer[idx] = number of skeletons of the current length reaching buffer idx.
  std::unordered_map<std::uint64_t, BigInt> layer{{1, BigInt(1)}};
  std::map<std::uint64_t, BigInt> finals;  // dense index -> tape count
  for (unsigned k = 0; k <= n_ops && !layer.empty(); ++k) {
    for (const auto& [idx, count] : layer) {
      const unsigned len = static_cast<unsigned>(63 - __builtin_clzll(idx));
      if (len == m) finals[idx] += count * weights[k];
    }
    if (k == n_ops) break;
    std::unordered_map<std::uint64_t, BigInt> next;
    for (const auto& [idx, count] : layer) {
      const unsigned len = static_cast<unsigned>(63 - __builtin_clzll(idx));
      SmallBuf b{len, idx ^ (std::uint64_t{1} << len)};
      for (unsigned op : {kEmit0, kEmit1, kDbl}) {
        SmallBuf nb = b;
        if (Step(nb, op, m)) next[DenseIndex(nb)] += count;
      }
    }
    layer.swap(next);
  }
  std::map<Outcome, BigInt> tally;
  BigInt reached = 0;
  for (const auto& [idx, count] : finals) {
    BigInt c = count << spare;
    reached += c;
    tally.emplace(Outcome(BitTape::FromInteger(idx ^ (std::uint64_t{1} << m), m)), c);
  }
  BigInt bottom = Pow2(budget.t) - reached;
  if (bottom > 0) tally.emplace(Outcome::Bottom(), bottom);
  return tally;
}

UniversalDistribution universal_distribution(const VmBudget& budget, const Mode& mode) {
  budget.Validate();
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const UniversalDistribution>> cache;
  const std::string key = CacheKey(budget, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  UniversalDistribution u;
  u.budget = budget;
  u.mode = mode;
  if (mode.kind == Mode::Kind::kSampled) {
    if (mode.sample_count < 1) throw std::invalid_argument("sampled mode needs sample_count >= 1");
    std::map<Outcome, BigInt> tally = TallySampled(budget, mode);
    std::map<Outcome, double> probs;
    for (const auto& [o, c] : tally) {
      probs[o] = c.convert_to<double>() / static_cast<double>(mode.sample_count);
    }
    u.support = ExplicitDistribution::FromFloat(std::move(probs), kTolP);
  } else {
    std::map<Outcome, BigInt> tally =
        mode.kind == Mode::Kind::kExact ? TallyByEnumeration(budget) : TallyBySkeleton(budget);
    std::map<Outcome, Rational> probs;
    const BigInt den = Pow2(budget.t);
    for (const auto& [o, c] : tally) probs.emplace(o, Rational(c, den));
    u.support = ExplicitDistribution::FromExact(std::move(probs));
  }
  auto shared = std::make_shared<const UniversalDistribution>(u);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, shared);
  return u;
}

double uKt(const BitTape& x, const VmBudget& budget, const Mode& mode) {
  budget.Validate();
  if (x.size() != budget.m) throw std::invalid_argument("x.length must equal budget.m");
  if (mode.kind == Mode::Kind::kCounted && budget.m > kCountedMaxM) {
    if (budget.t > kTCountedMax) throw BudgetTooLarge("counted mode needs t <= " + std::to_string(kTCountedMax));
    return uKt_counted(x, budget.t);
  }
  UniversalDistribution u = universal_distribution(budget, mode);
  if (u.support.is_exact()) {
    Rational p = u.support.exact_prob(Outcome(x));
    return p == 0 ? kInf : -Log2(p);
  }
  double p = u.support.prob(Outcome(x));
  return p == 0 ? kInf : -std::log2(p);
}

double joint_uKt(const std::vector<BitTape>& tuple, const VmBudget& budget, const Mode& mode) {
  if (tuple.empty()) throw WrongArity("joint_uKt needs a nonempty tuple");
  const std::size_t m = tuple.front().size();
  for (const auto& y : tuple) {
    if (y.size() != m) throw WrongArity("tuple members must share one length");
  }
  return uKt(Concatenate(tuple), budget, mode);
}

BigInt TapeCount(const BitTape& x, unsigned t) {
  const std::size_t len = x.size();
  const unsigned n_ops = t / kStepsPerOpcode;
  const unsigned spare = t % kStepsPerOpcode;
  const auto& weights = SkeletonTable(n_ops, false);
  const auto dbl = DoublingTable(x);
  // cur[l] = skeletons of the current length whose output is x[0..l).
  std::vector<BigInt> cur(len + 1, 0), next(len + 1, 0);
  cur[0] = 1;
  BigInt total = 0;
  for (unsigned k = 0; k <= n_ops; ++k) {
    if (cur[len] != 0) total += cur[len] * weights[k];
    if (k == n_ops) break;
    for (auto& v : next) v = 0;
    bool any = false;
    for (std::size_t l = 0; l <= len; ++l) {
      if (cur[l] == 0) continue;
      if (l == 0) next[0] += cur[0];  // DBL on empty output
      if (l < len) next[l + 1] += cur[l];
      if (l >= 1 && 2 * l <= len && dbl[l]) next[2 * l] += cur[l];
      any = true;
    }
    if (!any) break;
    cur.swap(next);
  }
  return total << spare;
}

double uKt_counted(const BitTape& x, unsigned t) {
  if (t > kTCountedMax) throw BudgetTooLarge("counted mode needs t <= " + std::to_string(kTCountedMax));
  BigInt c = TapeCount(x, t);
  if (c == 0) return kInf;
  return -Log2(Rational(c, Pow2(t)));
}

double uKt_unbounded(const BitTape& x) {
  const std::size_t len = x.size();
  if (len == 0) throw std::invalid_argument("uKt_unbounded needs a nonempty string");
  // With unlimited opcodes every non-NOP opcode is uniform over the four
  // operations, so a skeleton of k ops followed by HALT has weight 4^-(k+1).
  // lf[l] = log2 of the total weight of completions from prefix l.
  const auto dbl = DoublingTable(x);
  std::vector<double> lf(len + 1, 0.0);
  lf[len] = -2.0;
  for (std::size_t l = len - 1; l >= 1; --l) {
    double a = lf[l + 1];
    if (2 * l <= len && dbl[l]) {
      double b = lf[2 * l];
      double hi = std::max(a, b), lo = std::min(a, b);
      a = hi + std::log2(1.0 + std::exp2(lo - hi));
    }
    lf[l] = a - 2.0;
  }
  // From the empty output: EMIT x[0] (1/4), DBL no-op (1/4), HALT gives ⊥.
  const double l0 = lf[1] - std::log2(3.0);
  return -l0;
}

}  // namespace kolmoverify::bitvm
