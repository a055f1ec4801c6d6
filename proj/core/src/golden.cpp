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

#include "kolmoverify/golden.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "json_util.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/experiments.hpp"

namespace kolmoverify::golden {

using nlohmann::json;

namespace {

// Pinned complexity probes; the CLI examples read the first two.
struct Probe {
  const char* flavor;
  const char* x;
  unsigned t;
};
constexpr Probe kProbes[] = {
    {"ukt", "00", 12}, {"qukt", "0", 16}, {"ukt", "0", 8},    {"ukt", "0101", 16},
    {"ukt", "1", 20},  {"qukt", "1", 16}, {"qukt", "00", 20}, {"qukt", "0000", 80},
};

double ReadNumber(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParseError("bad golden number: " + s);
  }
  return j.get<double>();
}

}  // namespace

double Complexity(const std::string& flavor, const std::string& x, unsigned t) {
  const BitTape tape = BitTape::FromString(x);
  if (tape.size() == 0) throw ParseError("empty bitstring");
  if (flavor == "ukt") return experiments::ClassicalComplexity(tape, t);
  if (flavor == "qukt") return experiments::QuantumComplexity(tape, t);
  throw UnsupportedSpec("unknown flavor: " + flavor);
}

Goldens Compute() {
  using namespace experiments;
  Goldens g;
  g.coding_t = kCodingT;
  g.coding_quantum_t = kQuantumT;
  g.embed_t = kEmbedT;
  const auto corpus = samplers::CorpusV1();
  g.c_univ = exp_coding(corpus, kCodingT, false).observed.at("c_univ");
  g.c_q = exp_coding(corpus, kQuantumT, true).observed.at("c_q");
  g.c_embed = exp_embedding(kEmbedT).observed.at("C_embed");
  for (const auto& p : kProbes) {
    g.complexities.push_back({p.flavor, p.x, p.t, Complexity(p.flavor, p.x, p.t)});
  }
  return g;
}

std::string Serialize(const Goldens& g) {
  json j;
  j["coding_t"] = g.coding_t;
  j["coding_quantum_t"] = g.coding_quantum_t;
  j["embed_t"] = g.embed_t;
  j["c_univ"] = JsonNumber(g.c_univ);
  j["c_q"] = JsonNumber(g.c_q);
  j["C_embed"] = JsonNumber(g.c_embed);
  json list = json::array();
  for (const auto& c : g.complexities) {
    list.push_back({{"flavor", c.flavor}, {"x", c.x}, {"t", c.t}, {"value", JsonNumber(c.value)}});
  }
  j["complexities"] = std::move(list);
  return j.dump(2) + "\n";
}

Goldens Parse(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    Goldens g;
    g.coding_t = j.at("coding_t").get<unsigned>();
    g.coding_quantum_t = j.at("coding_quantum_t").get<unsigned>();
    g.embed_t = j.at("embed_t").get<unsigned>();
    g.c_univ = ReadNumber(j.at("c_univ"));
    g.c_q = ReadNumber(j.at("c_q"));
    g.c_embed = ReadNumber(j.at("C_embed"));
    for (const auto& c : j.at("complexities")) {
      g.complexities.push_back({c.at("flavor").get<std::string>(), c.at("x").get<std::string>(),
                                c.at("t").get<unsigned>(), ReadNumber(c.at("value"))});
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("goldens: ") + e.what());
  }
}

Goldens Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

std::vector<std::string> Diff(const Goldens& frozen, const Goldens& fresh) {
  std::vector<std::string> out;
  auto cmp = [&](const std::string& name, double a, double b) {
    if (!(a == b)) {
      std::ostringstream os;
      os.precision(17);
      os << name << ": frozen " << a << " != measured " << b;
      out.push_back(os.str());
    }
  };
  cmp("c_univ", frozen.c_univ, fresh.c_univ);
  cmp("c_q", frozen.c_q, fresh.c_q);
  cmp("C_embed", frozen.c_embed, fresh.c_embed);
  if (frozen.complexities.size() != fresh.complexities.size()) {
    out.push_back("complexity probe count differs");
    return out;
  }
  for (std::size_t i = 0; i < frozen.complexities.size(); ++i) {
    const auto& a = frozen.complexities[i];
    const auto& b = fresh.complexities[i];
    const std::string name = a.flavor + "(" + a.x + ",t=" + std::to_string(a.t) + ")";
    if (a.flavor != b.flavor || a.x != b.x || a.t != b.t) {
      out.push_back(name + ": probe differs");
      continue;
    }
    cmp(name, a.value, b.value);
  }
  return out;
}

}  // namespace kolmoverify::golden
