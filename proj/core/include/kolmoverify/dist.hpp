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

#ifndef KOLMOVERIFY_DIST_HPP_
#define KOLMOVERIFY_DIST_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kolmoverify/errors.hpp"
#include "kolmoverify/numeric.hpp"
#include "kolmoverify/outcome.hpp"

namespace kolmoverify {

enum class Backing { kExact, kFloat };

inline constexpr std::size_t kExpansionCap = std::size_t{1} << 20;

// Finite probability distribution over Key. Exact backing stores rationals
// (and a double shadow for fast reads); float backing stores doubles only.
// Zero-probability entries are never stored.
template <typename Key>
class FiniteDistribution {
 public:
  FiniteDistribution() = default;

  static FiniteDistribution FromExact(std::map<Key, Rational> entries);
  // Float entries must sum to 1 within `tol`.
  static FiniteDistribution FromFloat(std::map<Key, double> entries,
                                      double tol = 1e-9);
  static FiniteDistribution PointMass(const Key& k) {
    return FromExact({{k, Rational(1)}});
  }

  Backing backing() const { return backing_; }
  bool is_exact() const { return backing_ == Backing::kExact; }

  double prob(const Key& k) const {
    auto it = probs_.find(k);
    return it == probs_.end() ? 0.0 : it->second;
  }
  // Requires exact backing.
  Rational exact_prob(const Key& k) const;

  const std::map<Key, double>& entries() const { return probs_; }
  const std::map<Key, Rational>& exact_entries() const { return exact_; }
  std::size_t support_size() const { return probs_.size(); }
  std::vector<Key> support() const;

  // Sum of stored probabilities; exactly 1 for exact backing.
  double total_mass() const;

  bool operator==(const FiniteDistribution& o) const {
    return backing_ == o.backing_ && probs_ == o.probs_ && exact_ == o.exact_;
  }

 private:
  Backing backing_ = Backing::kExact;
  std::map<Key, double> probs_;
  std::map<Key, Rational> exact_;
};

using ExplicitDistribution = FiniteDistribution<Outcome>;

// Distribution over s-tuples of outcomes.
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(std::size_t arity, FiniteDistribution<Tuple> dist);

  std::size_t arity() const { return arity_; }
  const FiniteDistribution<Tuple>& dist() const { return dist_; }
  double prob(const Tuple& t) const { return dist_.prob(t); }

 private:
  std::size_t arity_ = 0;
  FiniteDistribution<Tuple> dist_;
};

double tv_distance(const ExplicitDistribution& p, const ExplicitDistribution& q);
double tv_distance(const JointDistribution& p, const JointDistribution& q);
// Both arguments must be exact.
Rational tv_distance_exact(const ExplicitDistribution& p,
                           const ExplicitDistribution& q);

double shannon_entropy(const ExplicitDistribution& p);

// KL(P || Q) in bits; +inf when P charges an outcome Q does not.
double kl_divergence(const ExplicitDistribution& p, const ExplicitDistribution& q);
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

JointDistribution product_power(const ExplicitDistribution& p, std::size_t s);

// Distribution of the i-th coordinate.
ExplicitDistribution marginal(const JointDistribution& j, std::size_t i);
// Uniform-index marginal (1/s) * sum_i marginal(j, i).
ExplicitDistribution marginal_mixture(const JointDistribution& j);

// Bayes conditioning on the event `a`. Throws ZeroMassEvent if Pr[a] == 0.
JointDistribution condition_on(const JointDistribution& j,
                               const std::function<bool(const Tuple&)>& a);

struct FannesGap {
  double lhs;
  double rhs;
};
// (|H(P) - H(Q)|, Δ(P,Q)·log2(universe_size) + 1/e).
FannesGap fannes_gap(const ExplicitDistribution& p, const ExplicitDistribution& q,
                     double universe_size);

// eps + sqrt((log2(1/(1-eps)) + alpha + c) / s).
double marginal_lemma_bound(double eps, double alpha, std::size_t s, double c);

// "outcome,probability" rows, header included.
std::string ToCsv(const ExplicitDistribution& p);

// ---- template implementation ------------------------------------------------

template <typename Key>
FiniteDistribution<Key> FiniteDistribution<Key>::FromExact(
    std::map<Key, Rational> entries) {
  FiniteDistribution d;
  d.backing_ = Backing::kExact;
  Rational total = 0;
  for (auto& [k, v] : entries) {
    if (v < 0) throw std::invalid_argument("negative probability");
    if (v == 0) continue;
    total += v;
    d.probs_.emplace(k, ToDouble(v));
    d.exact_.emplace(k, v);
  }
  if (total != 1) throw std::invalid_argument("exact distribution does not sum to 1");
  return d;
}

template <typename Key>
FiniteDistribution<Key> FiniteDistribution<Key>::FromFloat(
    std::map<Key, double> entries, double tol) {
  FiniteDistribution d;
  d.backing_ = Backing::kFloat;
  long double total = 0;
  for (auto& [k, v] : entries) {
    if (!(v >= 0)) throw std::invalid_argument("negative probability");
    if (v == 0) continue;
    total += v;
    d.probs_.emplace(k, v);
  }
  if (std::abs(static_cast<double>(total) - 1.0) > tol) {
    throw std::invalid_argument("float distribution does not sum to 1");
  }
  return d;
}

template <typename Key>
Rational FiniteDistribution<Key>::exact_prob(const Key& k) const {
  if (!is_exact()) throw std::logic_error("exact_prob on float-backed distribution");
  auto it = exact_.find(k);
  return it == exact_.end() ? Rational(0) : it->second;
}

template <typename Key>
std::vector<Key> FiniteDistribution<Key>::support() const {
  std::vector<Key> out;
  out.reserve(probs_.size());
  for (const auto& [k, v] : probs_) out.push_back(k);
  return out;
}

template <typename Key>
double FiniteDistribution<Key>::total_mass() const {
  if (is_exact()) return 1.0;
  long double total = 0;
  for (const auto& [k, v] : probs_) total += v;
  return static_cast<double>(total);
}

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_DIST_HPP_
