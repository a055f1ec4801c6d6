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

#include "kolmoverify/qsim.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "kolmoverify/errors.hpp"
#include "kolmoverify/rng.hpp"

namespace kolmoverify::qsim {

namespace {

enum class ParseStatus { kIncomplete, kComplete, kInvalid };

struct ParseResult {
  ParseStatus status = ParseStatus::kIncomplete;
  Circuit circuit;
  std::size_t bits_used = 0;
};

unsigned ReadBits(const BitTape& b, std::size_t pos, unsigned width) {
  unsigned v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | b[pos + i];
  return v;
}

// Parses as far as the buffer allows. `want_qubits` (0 = any) prunes
// headers early. `max_depth` (0 = unlimited) rejects deep circuits.
ParseResult Parse(const BitTape& b, unsigned want_qubits, unsigned max_depth) {
  ParseResult r;
  if (b.size() < 3) return r;
  r.circuit.qubit_count = ReadBits(b, 0, 3) + 1;
  const unsigned q = r.circuit.qubit_count;
  if (want_qubits != 0 && q != want_qubits) {
    r.status = ParseStatus::kInvalid;
    return r;
  }
  std::vector<unsigned> layer(q, 0);
  unsigned depth = 0;
  std::size_t pos = 3;
  while (true) {
    if (pos + 2 > b.size()) return r;
    unsigned tag = ReadBits(b, pos, 2);
    if (tag == 0) {
      r.status = ParseStatus::kComplete;
      r.bits_used = pos + 2;
      return r;
    }
    const unsigned width = tag == 3 ? 8 : 5;
    if (pos + width > b.size()) {
      // Reject out-of-range indices as soon as they are visible.
      if (pos + 5 <= b.size() && ReadBits(b, pos + 2, 3) >= q) r.status = ParseStatus::kInvalid;
      return r;
    }
    Gate g;
    g.target = ReadBits(b, pos + 2, 3);
    if (g.target >= q) {
      r.status = ParseStatus::kInvalid;
      return r;
    }
    if (tag == 3) {
      g.kind = GateKind::kCnot;
      g.control = ReadBits(b, pos + 5, 3);
      if (g.control >= q || g.control == g.target) {
        r.status = ParseStatus::kInvalid;
        return r;
      }
      unsigned d = std::max(layer[g.target], layer[g.control]) + 1;
      layer[g.target] = layer[g.control] = d;
      depth = std::max(depth, d);
    } else {
      g.kind = tag == 1 ? GateKind::kH : GateKind::kT;
      unsigned d = layer[g.target] + 1;
      layer[g.target] = d;
      depth = std::max(depth, d);
    }
    if (max_depth != 0 && depth > max_depth) {
      r.status = ParseStatus::kInvalid;
      return r;
    }
    r.circuit.gates.push_back(g);
    pos += width;
  }
}

void AppendBits(BitTape& b, unsigned v, unsigned width) {
  for (unsigned i = 0; i < width; ++i) b.push_back((v >> (width - 1 - i)) & 1);
}

// Large enough for every buffer reachable at the enumerable budgets.
constexpr std::size_t kRawCap = 4096;

std::map<Outcome, double> MixCircuits(const std::map<Circuit, BigInt>& tally,
                                      const BigInt& total, unsigned m) {
  std::map<Outcome, long double> acc;
  BigInt reached = 0;
  for (const auto& [c, count] : tally) {
    reached += count;
    const double w = ToDouble(Rational(count, total));
    const ExplicitDistribution out = simulate(c, m);
    for (const auto& [o, p] : out.entries()) {
      acc[o] += static_cast<long double>(w) * p;
    }
  }
  std::map<Outcome, double> out;
  for (const auto& [o, p] : acc) out[o] = static_cast<double>(p);
  if (reached < total) out[Outcome::Bottom()] += ToDouble(Rational(total - reached, total));
  return out;
}

std::string CacheKey(const VmBudget& b, const Mode& m) {
  std::ostringstream os;
  os << b.n << '/' << b.t << '/' << b.m << '/' << m.ToString();
  return os.str();
}

}  // namespace

unsigned Circuit::depth() const {
  std::vector<unsigned> layer(qubit_count, 0);
  unsigned depth = 0;
  for (const auto& g : gates) {
    unsigned d = layer[g.target] + 1;
    if (g.kind == GateKind::kCnot) {
      d = std::max(layer[g.target], layer[g.control]) + 1;
      layer[g.control] = d;
    }
    layer[g.target] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

CircuitEncoding decode_circuit(const BitTape& c, const VmBudget& budget) {
  CircuitEncoding enc;
  enc.raw = c;
  ParseResult r = Parse(c, 0, budget.t);
  if (r.status == ParseStatus::kComplete) {
    enc.decoded = std::move(r.circuit);
    enc.encoded_bits = r.bits_used;
  }
  return enc;
}

BitTape encode_circuit(const Circuit& circuit) {
  if (circuit.qubit_count < 1 || circuit.qubit_count > kQMax) {
    throw TooManyQubits("qubit_count must lie in [1, 8]");
  }
  BitTape b;
  AppendBits(b, circuit.qubit_count - 1, 3);
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::kH:
        AppendBits(b, 1, 2);
        AppendBits(b, g.target, 3);
        break;
      case GateKind::kT:
        AppendBits(b, 2, 2);
        AppendBits(b, g.target, 3);
        break;
      case GateKind::kCnot:
        AppendBits(b, 3, 2);
        AppendBits(b, g.target, 3);
        AppendBits(b, g.control, 3);
        break;
    }
  }
  AppendBits(b, 0, 2);
  return b;
}

Circuit ParseCircuitText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  Circuit c;
  bool have_header = false, ended = false;
  auto read_index = [&](const char* what) {
    long v;
    if (!(in >> v) || v < 0 || v >= static_cast<long>(kQMax)) {
      throw ParseError(std::string("bad ") + what + " index in circuit text");
    }
    return static_cast<unsigned>(v);
  };
  while (in >> word) {
    if (ended) throw ParseError("content after 'end' in circuit text");
    if (!have_header) {
      long q;
      if (word != "q" || !(in >> q) || q < 1 || q > static_cast<long>(kQMax)) {
        throw ParseError("circuit text must start with 'q <count>' (1..8)");
      }
      c.qubit_count = static_cast<unsigned>(q);
      have_header = true;
    } else if (word == "h" || word == "t") {
      c.gates.push_back({word == "h" ? GateKind::kH : GateKind::kT, read_index("target"), 0});
    } else if (word == "cx") {
      unsigned ctl = read_index("control");
      unsigned tgt = read_index("target");
      c.gates.push_back({GateKind::kCnot, tgt, ctl});
    } else if (word == "end") {
      ended = true;
    } else {
      throw ParseError("unknown circuit text token '" + word + "'");
    }
  }
  if (!ended) throw ParseError("circuit text must end with 'end'");
  for (const auto& g : c.gates) {
    if (g.target >= c.qubit_count || (g.kind == GateKind::kCnot &&
                                      (g.control >= c.qubit_count || g.control == g.target))) {
      throw ParseError("gate index out of range in circuit text");
    }
  }
  return c;
}

std::string FormatCircuitText(const Circuit& circuit) {
  std::ostringstream os;
  os << "q " << circuit.qubit_count << '\n';
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::kH: os << "h " << g.target << '\n'; break;
      case GateKind::kT: os << "t " << g.target << '\n'; break;
      case GateKind::kCnot: os << "cx " << g.control << ' ' << g.target << '\n'; break;
    }
  }
  os << "end\n";
  return os.str();
}

ExplicitDistribution simulate(const Circuit& circuit, unsigned m) {
  const unsigned q = circuit.qubit_count;
  if (q > kQMax) throw TooManyQubits("circuit uses more than 8 qubits");
  if (q != m) return ExplicitDistribution::PointMass(Outcome::Bottom());
  using Amp = std::complex<double>;
  const std::size_t dim = std::size_t{1} << q;
  std::vector<Amp> psi(dim, 0.0);
  psi[0] = 1.0;
  // Qubit j is bit (q-1-j) of the basis index, so the index read MSB first
  // lists qubit 0 first.
  auto mask = [q](unsigned j) { return std::size_t{1} << (q - 1 - j); };
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Amp t_phase = std::polar(1.0, std::numbers::pi / 4);
  for (const auto& g : circuit.gates) {
    const std::size_t tm = mask(g.target);
    switch (g.kind) {
      case GateKind::kH:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & tm) continue;
          Amp a = psi[i], b = psi[i | tm];
          psi[i] = (a + b) * inv_sqrt2;
          psi[i | tm] = (a - b) * inv_sqrt2;
        }
        break;
      case GateKind::kT:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & tm) psi[i] *= t_phase;
        }
        break;
      case GateKind::kCnot: {
        const std::size_t cm = mask(g.control);
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & cm) && !(i & tm)) std::swap(psi[i], psi[i | tm]);
        }
        break;
      }
    }
  }
  std::map<Outcome, double> probs;
  for (std::size_t i = 0; i < dim; ++i) {
    double p = std::norm(psi[i]);
    // Amplitudes below the tolerance are rounding residue of exact zeros.
    if (p > kTolAmp * kTolAmp) probs[Outcome(BitTape::FromInteger(i, q))] = p;
  }
  long double total = 0;
  for (const auto& [o, p] : probs) total += p;
  for (auto& [o, p] : probs) p = static_cast<double>(p / total);
  return ExplicitDistribution::FromFloat(std::move(probs), kTolAmp);
}

std::map<Circuit, BigInt> CircuitTallyByEnumeration(const VmBudget& budget) {
  budget.Validate();
  if (budget.t > kTMaxQ) throw BudgetTooLarge("quantum enumeration needs t <= " + std::to_string(kTMaxQ));
  const unsigned n_ops = budget.t / bitvm::kStepsPerOpcode;
  const unsigned spare = budget.t % bitvm::kStepsPerOpcode;
  const unsigned bits = n_ops * bitvm::kStepsPerOpcode;
  std::unordered_map<BitTape, std::optional<Circuit>, BitTapeHash> decoded;
  std::map<Circuit, BigInt> tally;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    bitvm::RawRun run = bitvm::execute(BitTape::FromInteger(v, bits), bits, kRawCap);
    auto it = decoded.find(run.output);
    if (it == decoded.end()) {
      ParseResult r = Parse(run.output, budget.m, budget.t);
      std::optional<Circuit> c;
      if (r.status == ParseStatus::kComplete) c = r.circuit;
      it = decoded.emplace(run.output, std::move(c)).first;
    }
    if (it->second) tally[*it->second] += 1;
  }
  for (auto& [c, n] : tally) n <<= spare;
  return tally;
}

std::map<Circuit, BigInt> CircuitTallyBySkeleton(const VmBudget& budget) {
  budget.Validate();
  if (budget.t > bitvm::kTCountedMax) throw BudgetTooLarge("counted mode needs t <= " + std::to_string(bitvm::kTCountedMax));
  if (budget.m > kQMax) return {};
  const unsigned n_ops = budget.t / bitvm::kStepsPerOpcode;
  const unsigned spare = budget.t % bitvm::kStepsPerOpcode;
  std::unordered_map<BitTape, BigInt, BitTapeHash> layer{{BitTape(), BigInt(1)}};
  std::map<Circuit, BigInt> tally;
  for (unsigned k = 0; k < n_ops && !layer.empty(); ++k) {
    // Every continuation of a length-(k+1) skeleton prefix.
    const BigInt weight = bitvm::SkeletonPrefixWeight(n_ops, k + 1);
    std::unordered_map<BitTape, BigInt, BitTapeHash> next;
    for (const auto& [buf, count] : layer) {
      for (unsigned op : {bitvm::kEmit0, bitvm::kEmit1, bitvm::kDbl}) {
        BitTape nb = buf;
        if (op == bitvm::kDbl) nb.append(buf);
        else nb.push_back(op == bitvm::kEmit1);
        ParseResult r = Parse(nb, budget.m, budget.t);
        if (r.status == ParseStatus::kComplete) tally[r.circuit] += count * weight;
        else if (r.status == ParseStatus::kIncomplete) next[nb] += count;
      }
    }
    layer.swap(next);
  }
  for (auto& [c, n] : tally) n <<= spare;
  return tally;
}

QuantumUniversalDistribution quantum_universal_distribution(const VmBudget& budget,
                                                            const Mode& mode) {
  budget.Validate();
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const QuantumUniversalDistribution>> cache;
  const std::string key = CacheKey(budget, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  QuantumUniversalDistribution u;
  u.budget = budget;
  u.mode = mode;
  if (mode.kind == Mode::Kind::kSampled) {
    if (mode.sample_count < 1) throw std::invalid_argument("sampled mode needs sample_count >= 1");
    std::map<Circuit, BigInt> tally;
    Rng rng(mode.seed);
    for (std::uint64_t s = 0; s < mode.sample_count; ++s) {
      BitTape tape(budget.t);
      if (mode.policy == bitvm::SeedPolicy::kEnumerate) {
        if (budget.t > 63) throw BudgetTooLarge("enumerate policy needs t <= 63");
        tape = BitTape::FromInteger(s & ((std::uint64_t{1} << budget.t) - 1), budget.t);
      } else {
        for (unsigned i = 0; i < budget.t; ++i) tape.set(i, rng.bit());
      }
      bitvm::RawRun run = bitvm::execute(tape, budget.t, kRawCap);
      ParseResult r = Parse(run.output, budget.m, budget.t);
      if (r.status == ParseStatus::kComplete) tally[r.circuit] += 1;
    }
    u.support = ExplicitDistribution::FromFloat(MixCircuits(tally, BigInt(mode.sample_count), budget.m), kTolP);
  } else {
    auto tally = mode.kind == Mode::Kind::kExact ? CircuitTallyByEnumeration(budget)
                                                 : CircuitTallyBySkeleton(budget);
    u.support = ExplicitDistribution::FromFloat(MixCircuits(tally, Pow2(budget.t), budget.m), kTolP);
  }
  auto shared = std::make_shared<const QuantumUniversalDistribution>(u);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, shared);
  return u;
}

double quKt(const BitTape& x, const VmBudget& budget, const Mode& mode) {
  if (x.size() != budget.m) throw std::invalid_argument("x.length must equal budget.m");
  double p = quantum_universal_distribution(budget, mode).support.prob(Outcome(x));
  return p == 0 ? kInf : -std::log2(p);
}

}  // namespace kolmoverify::qsim
