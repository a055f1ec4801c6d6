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

#ifndef KOLMOVERIFY_BITVM_HPP_
#define KOLMOVERIFY_BITVM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kolmoverify/bittape.hpp"
#include "kolmoverify/dist.hpp"
#include "kolmoverify/numeric.hpp"
#include "kolmoverify/outcome.hpp"

// KVM-1: the tape is read as 4-bit opcodes, most significant bit first.
//   0000 HALT, 0001 EMIT0, 0010 EMIT1, 0011 DBL (append a copy of the
//   output; no-op on empty output), 0100..1111 NOP.
// One opcode costs 4 steps; running out of tape or budget halts.
namespace kolmoverify::bitvm {

enum Opcode : std::uint8_t { kHalt = 0, kEmit0 = 1, kEmit1 = 2, kDbl = 3 };

inline constexpr unsigned kStepsPerOpcode = 4;
inline constexpr unsigned kNopCount = 12;
// Largest budget for exhaustive tape enumeration.
inline constexpr unsigned kTMax = 24;
// Largest budget accepted by the counted engine.
inline constexpr unsigned kTCountedMax = 4096;
// Largest output length accepted by the counted engine's distribution mode.
inline constexpr unsigned kCountedMaxM = 16;

struct VmBudget {
  unsigned n = 1;
  unsigned t = 1;
  unsigned m = 1;

  void Validate() const;  // throws std::invalid_argument
  bool operator==(const VmBudget&) const = default;
};

// Result of running a tape without a length check. `overflow` is set when the
// buffer grew past `cap` bits; `output` then holds the first `cap` bits.
struct RawRun {
  BitTape output;
  bool overflow = false;
  unsigned opcodes_executed = 0;
};
RawRun execute(const BitTape& tape, unsigned t, std::size_t cap);

// Requires tape.size() == budget.t.
Outcome run_vm(const BitTape& tape, const VmBudget& budget);

enum class SeedPolicy { kRandom, kEnumerate };

// How a universal distribution is obtained.
//   kExact   - tally every one of the 2^t tapes (t <= kTMax).
//   kSampled - tally `sample_count` tapes drawn with `seed`; with
//              kEnumerate the tapes are 0,1,2,... instead.
//   kCounted - exact, by counting tapes per opcode skeleton; agrees with
//              kExact wherever both run, and reaches t <= kTCountedMax.
struct Mode {
  enum class Kind { kExact, kSampled, kCounted };
  Kind kind = Kind::kExact;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  SeedPolicy policy = SeedPolicy::kRandom;

  static Mode Exact() { return {}; }
  static Mode Counted() { return {Kind::kCounted, 0, 0, SeedPolicy::kRandom}; }
  static Mode Sampled(std::uint64_t count, std::uint64_t seed,
                      SeedPolicy policy = SeedPolicy::kRandom) {
    return {Kind::kSampled, count, seed, policy};
  }
  std::string ToString() const;
  bool operator==(const Mode&) const = default;
};

struct UniversalDistribution {
  ExplicitDistribution support;
  VmBudget budget;
  Mode mode;
};

// Number of tapes (out of 2^t) producing each outcome. Exhaustive
// enumeration; t <= kTMax.
std::map<Outcome, BigInt> TallyByEnumeration(const VmBudget& budget);
// Same numbers via skeleton counting.
std::map<Outcome, BigInt> TallyBySkeleton(const VmBudget& budget);

UniversalDistribution universal_distribution(const VmBudget& budget,
                                             const Mode& mode = Mode::Exact());

// -log2 Pr[x <- U^t]; +inf when unreachable. Distributions are cached per
// (budget, mode).
double uKt(const BitTape& x, const VmBudget& budget,
           const Mode& mode = Mode::Exact());

// uKt of y_1 || ... || y_s. `budget.m` must equal the concatenated length.
double joint_uKt(const std::vector<BitTape>& tuple, const VmBudget& budget,
                 const Mode& mode = Mode::Exact());

// Exact count of length-t tapes whose run outputs exactly x (no length
// filter other than |x|). Linear in t·|x| big-integer operations.
BigInt TapeCount(const BitTape& x, unsigned t);
// t - log2(TapeCount(x, t)); equals uKt(x, {n, t, |x|}).
double uKt_counted(const BitTape& x, unsigned t);
// lim_{t->inf} uKt(x, t), computed in the log domain in O(|x|).
double uKt_unbounded(const BitTape& x);

// Tapes of N opcodes whose non-NOP opcode sequence (up to the first HALT) is
// one fixed sequence of length k. Summed over all 3^k sequences and k this
// gives 16^N.
BigInt SkeletonWeight(unsigned opcodes, unsigned k);
// Tapes of N opcodes whose first k non-NOP opcodes are one fixed HALT-free
// sequence (k >= 1).
BigInt SkeletonPrefixWeight(unsigned opcodes, unsigned k);

}  // namespace kolmoverify::bitvm

#endif  // KOLMOVERIFY_BITVM_HPP_
