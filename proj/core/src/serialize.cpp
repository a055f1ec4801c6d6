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

#include "kolmoverify/serialize.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "kolmoverify/errors.hpp"
#include "json_util.hpp"

namespace kolmoverify {

using nlohmann::json;

std::string DistributionToJson(const ExplicitDistribution& dist, const bitvm::VmBudget& budget,
                               const std::string& mode) {
  json entries = json::array();
  auto emit = [&](const Outcome& x, const Rational& p) {
    const Dyadic d = ToDyadic(p);
    json e;
    e["outcome"] = x.ToString();
    if (d.num <= BigInt(INT64_MAX)) {
      e["num"] = static_cast<std::int64_t>(d.num);
    } else {
      std::ostringstream os;
      os << d.num;
      e["num"] = os.str();
    }
    e["log2den"] = d.log2den;
    entries.push_back(std::move(e));
  };
  if (dist.is_exact()) {
    for (const auto& [x, p] : dist.exact_entries()) emit(x, p);
  } else {
    for (const auto& [x, p] : dist.entries()) emit(x, ExactRational(p));
  }
  json j;
  j["budget"] = {{"n", budget.n}, {"t", budget.t}, {"m", budget.m}};
  j["mode"] = mode;
  j["entries"] = std::move(entries);
  return j.dump();
}

std::string ToJson(const bitvm::UniversalDistribution& u) {
  return DistributionToJson(u.support, u.budget, u.mode.ToString());
}

std::string ToJson(const qsim::QuantumUniversalDistribution& u) {
  return DistributionToJson(u.support, u.budget, u.mode.ToString());
}

ExplicitDistribution DistributionFromJson(const std::string& text, bitvm::VmBudget* budget) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("distribution JSON: ") + e.what());
  }
  if (budget != nullptr) {
    const auto& b = j.at("budget");
    *budget = {b.at("n").get<unsigned>(), b.at("t").get<unsigned>(), b.at("m").get<unsigned>()};
  }
  std::map<Outcome, Rational> entries;
  for (const auto& e : j.at("entries")) {
    const BigInt num = e.at("num").is_string() ? BigInt(e.at("num").get<std::string>())
                                               : BigInt(e.at("num").get<std::int64_t>());
    entries[Outcome::Parse(e.at("outcome").get<std::string>())] =
        FromDyadic(num, e.at("log2den").get<unsigned>());
  }
  Rational total = 0;
  for (const auto& [x, p] : entries) total += p;
  if (total == 1) return ExplicitDistribution::FromExact(entries);
  std::map<Outcome, double> floats;
  for (const auto& [x, p] : entries) floats[x] = ToDouble(p);
  return ExplicitDistribution::FromFloat(floats);
}

std::string ToJson(const verify::Verdict& v) {
  json j;
  j["accepted"] = v.accepted;
  j["k"] = JsonNumber(v.k);
  j["neg_log_p"] = JsonNumber(v.neg_log_p);
  j["alpha"] = JsonNumber(v.alpha);
  j["blocks"] = json::array();
  for (bool b : v.blocks) j["blocks"].push_back(b);
  j["gaps"] = json::array();
  for (double g : v.gaps) j["gaps"].push_back(JsonNumber(g));
  j["count"] = v.count;
  j["seed"] = v.seed;
  return j.dump();
}

}  // namespace kolmoverify
