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

#ifndef KOLMOVERIFY_QSIM_HPP_
#define KOLMOVERIFY_QSIM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/bittape.hpp"
#include "kolmoverify/dist.hpp"

// Circuit encoding: a 3-bit header holding q-1, then records
//   00 END | 01 H <target> | 10 T <target> | 11 CNOT <target> <control>
// with 3-bit indices. Bits after END are ignored.
namespace kolmoverify::qsim {

using bitvm::Mode;
using bitvm::VmBudget;

inline constexpr unsigned kQMax = 8;
inline constexpr unsigned kTMaxQ = 20;
inline constexpr double kTolAmp = 1e-9;

enum class GateKind { kH, kT, kCnot };

struct Gate {
  GateKind kind;
  unsigned target = 0;
  unsigned control = 0;  // CNOT only
  bool operator==(const Gate&) const = default;
  auto operator<=>(const Gate&) const = default;
};

struct Circuit {
  unsigned qubit_count = 1;
  std::vector<Gate> gates;

  // Number of layers when each gate is scheduled as early as possible.
  unsigned depth() const;
  bool operator==(const Circuit&) const = default;
  auto operator<=>(const Circuit&) const = default;
};

struct CircuitEncoding {
  BitTape raw;
  std::optional<Circuit> decoded;
  // Bits consumed up to and including END (valid encodings only).
  std::size_t encoded_bits = 0;
};

// Never throws; a failure leaves `decoded` empty.
CircuitEncoding decode_circuit(const BitTape& c, const VmBudget& budget);
BitTape encode_circuit(const Circuit& circuit);

// Text form: "q <count>", then "h <t>" | "t <t>" | "cx <c> <t>", then "end".
Circuit ParseCircuitText(std::string_view text);
std::string FormatCircuitText(const Circuit& circuit);

// Born-rule output distribution (float backing); point mass on ⊥ when
// qubit_count != m. Throws TooManyQubits.
ExplicitDistribution simulate(const Circuit& circuit, unsigned m);

struct QuantumUniversalDistribution {
  ExplicitDistribution support;
  VmBudget budget;
  Mode mode;
};

// Tapes (out of 2^t) whose first-stage output decodes to each circuit with
// qubit_count == budget.m. Enumeration needs t <= kTMaxQ.
std::map<Circuit, BigInt> CircuitTallyByEnumeration(const VmBudget& budget);
// Same numbers by counting opcode skeletons that complete an encoding.
std::map<Circuit, BigInt> CircuitTallyBySkeleton(const VmBudget& budget);

QuantumUniversalDistribution quantum_universal_distribution(
    const VmBudget& budget, const Mode& mode = Mode::Exact());

double quKt(const BitTape& x, const VmBudget& budget, const Mode& mode = Mode::Exact());

}  // namespace kolmoverify::qsim

#endif  // KOLMOVERIFY_QSIM_HPP_
