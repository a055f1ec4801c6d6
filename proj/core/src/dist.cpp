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

#include "kolmoverify/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace kolmoverify {

namespace {

template <typename Key>
double TvImpl(const FiniteDistribution<Key>& p, const FiniteDistribution<Key>& q) {
  if (p.is_exact() && q.is_exact()) {
    Rational sum = 0;
    for (const auto& [k, v] : p.exact_entries()) sum += abs(v - q.exact_prob(k));
    for (const auto& [k, v] : q.exact_entries()) {
      if (p.exact_entries().count(k) == 0) sum += v;
    }
    return ToDouble(sum / 2);
  }
  long double sum = 0;
  for (const auto& [k, v] : p.entries()) sum += std::abs(static_cast<long double>(v) - q.prob(k));
  for (const auto& [k, v] : q.entries()) {
    if (p.entries().count(k) == 0) sum += v;
  }
  return std::min(1.0, static_cast<double>(sum / 2));
}

template <typename Key>
double KlImpl(const FiniteDistribution<Key>& p, const FiniteDistribution<Key>& q) {
  long double sum = 0;
  for (const auto& [k, pv] : p.entries()) {
    if (q.entries().count(k) == 0) return kInf;
    double ratio_log;
    if (p.is_exact() && q.is_exact()) {
      ratio_log = Log2(Rational(p.exact_prob(k) / q.exact_prob(k)));
    } else {
      ratio_log = std::log2(pv) - std::log2(q.prob(k));
    }
    sum += static_cast<long double>(pv) * ratio_log;
  }
  // Rounding can leave a tiny negative residue when P == Q.
  return std::max(0.0, static_cast<double>(sum));
}

template <typename Key>
FiniteDistribution<Key> Build(bool exact, std::map<Key, Rational>& ex,
                              std::map<Key, double>& fl) {
  if (exact) return FiniteDistribution<Key>::FromExact(std::move(ex));
  return FiniteDistribution<Key>::FromFloat(std::move(fl));
}

}  // namespace

JointDistribution::JointDistribution(std::size_t arity, FiniteDistribution<Tuple> dist)
    : arity_(arity), dist_(std::move(dist)) {
  if (arity_ == 0) throw std::invalid_argument("joint arity must be >= 1");
  for (const auto& [t, v] : dist_.entries()) {
    if (t.size() != arity_) throw WrongArity("tuple arity mismatch in joint distribution");
  }
}

double tv_distance(const ExplicitDistribution& p, const ExplicitDistribution& q) {
  return TvImpl(p, q);
}

double tv_distance(const JointDistribution& p, const JointDistribution& q) {
  return TvImpl(p.dist(), q.dist());
}

Rational tv_distance_exact(const ExplicitDistribution& p, const ExplicitDistribution& q) {
  if (!p.is_exact() || !q.is_exact()) throw std::logic_error("tv_distance_exact needs exact backing");
  Rational sum = 0;
  for (const auto& [k, v] : p.exact_entries()) sum += abs(v - q.exact_prob(k));
  for (const auto& [k, v] : q.exact_entries()) {
    if (p.exact_entries().count(k) == 0) sum += v;
  }
  return sum / 2;
}

double shannon_entropy(const ExplicitDistribution& p) {
  long double h = 0;
  for (const auto& [k, v] : p.entries()) {
    double lg = p.is_exact() ? Log2(p.exact_prob(k)) : std::log2(v);
    h -= static_cast<long double>(v) * lg;
  }
  return std::max(0.0, static_cast<double>(h));
}

double kl_divergence(const ExplicitDistribution& p, const ExplicitDistribution& q) {
  return KlImpl(p, q);
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  return KlImpl(p.dist(), q.dist());
}

JointDistribution product_power(const ExplicitDistribution& p, std::size_t s) {
  if (s == 0) throw std::invalid_argument("product_power needs s >= 1");
  long double size = std::pow(static_cast<long double>(p.support_size()), s);
  if (size > static_cast<long double>(kExpansionCap)) {
    throw ExpansionTooLarge("product support exceeds the expansion cap");
  }
  std::vector<Outcome> keys = p.support();
  std::map<Tuple, Rational> ex;
  std::map<Tuple, double> fl;
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    Tuple t(s);
    Rational r = 1;
    long double f = 1;
    for (std::size_t i = 0; i < s; ++i) {
      t[i] = keys[idx[i]];
      if (p.is_exact()) r *= p.exact_prob(t[i]);
      f *= p.prob(t[i]);
    }
    if (p.is_exact()) ex.emplace(t, r);
    else fl.emplace(t, static_cast<double>(f));
    std::size_t pos = s;
    while (pos > 0 && ++idx[pos - 1] == keys.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return JointDistribution(s, Build<Tuple>(p.is_exact(), ex, fl));
}

ExplicitDistribution marginal(const JointDistribution& j, std::size_t i) {
  if (i >= j.arity()) throw std::out_of_range("marginal index");
  const auto& d = j.dist();
  std::map<Outcome, Rational> ex;
  std::map<Outcome, double> fl;
  for (const auto& [t, v] : d.entries()) {
    if (d.is_exact()) ex[t[i]] += d.exact_prob(t);
    else fl[t[i]] += v;
  }
  return Build<Outcome>(d.is_exact(), ex, fl);
}

ExplicitDistribution marginal_mixture(const JointDistribution& j) {
  const auto& d = j.dist();
  const std::size_t s = j.arity();
  std::map<Outcome, Rational> ex;
  std::map<Outcome, double> fl;
  for (const auto& [t, v] : d.entries()) {
    for (std::size_t i = 0; i < s; ++i) {
      if (d.is_exact()) ex[t[i]] += d.exact_prob(t) / s;
      else fl[t[i]] += v / static_cast<double>(s);
    }
  }
  return Build<Outcome>(d.is_exact(), ex, fl);
}

JointDistribution condition_on(const JointDistribution& j,
                               const std::function<bool(const Tuple&)>& a) {
  const auto& d = j.dist();
  if (d.is_exact()) {
    Rational mass = 0;
    for (const auto& [t, v] : d.exact_entries()) {
      if (a(t)) mass += v;
    }
    if (mass == 0) throw ZeroMassEvent("conditioning event has probability 0");
    std::map<Tuple, Rational> ex;
    for (const auto& [t, v] : d.exact_entries()) {
      if (a(t)) ex.emplace(t, v / mass);
    }
    return JointDistribution(j.arity(), FiniteDistribution<Tuple>::FromExact(std::move(ex)));
  }
  long double mass = 0;
  for (const auto& [t, v] : d.entries()) {
    if (a(t)) mass += v;
  }
  if (mass == 0) throw ZeroMassEvent("conditioning event has probability 0");
  std::map<Tuple, double> fl;
  for (const auto& [t, v] : d.entries()) {
    if (a(t)) fl.emplace(t, static_cast<double>(v / mass));
  }
  return JointDistribution(j.arity(), FiniteDistribution<Tuple>::FromFloat(std::move(fl)));
}

FannesGap fannes_gap(const ExplicitDistribution& p, const ExplicitDistribution& q,
                     double universe_size) {
  double lhs = std::abs(shannon_entropy(p) - shannon_entropy(q));
  double rhs = tv_distance(p, q) * std::log2(universe_size) + 1.0 / std::numbers::e;
  return {lhs, rhs};
}

double marginal_lemma_bound(double eps, double alpha, std::size_t s, double c) {
  if (!(eps >= 0 && eps < 1)) throw std::invalid_argument("eps must lie in [0,1)");
  if (s == 0) throw std::invalid_argument("s must be >= 1");
  double inner = std::log2(1.0 / (1.0 - eps)) + alpha + c;
  return eps + std::sqrt(std::max(0.0, inner) / static_cast<double>(s));
}

std::string ToCsv(const ExplicitDistribution& p) {
  std::ostringstream os;
  os.precision(17);
  os << "outcome,probability\n";
  for (const auto& [k, v] : p.entries()) os << k.ToString() << ',' << v << '\n';
  return os.str();
}

}  // namespace kolmoverify
