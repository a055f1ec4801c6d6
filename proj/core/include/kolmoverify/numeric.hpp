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

#ifndef KOLMOVERIFY_NUMERIC_HPP_
#define KOLMOVERIFY_NUMERIC_HPP_

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kolmoverify {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kTolP = 1e-12;

// 2^k as a big integer.
BigInt Pow2(unsigned k);
BigInt PowInt(unsigned base, unsigned exponent);
BigInt Binomial(unsigned n, unsigned k);

// Double nearest to r, valid even when numerator and denominator overflow
// double range individually.
double ToDouble(const Rational& r);
// log2(r) for r > 0 (accurate to double precision for huge/tiny values);
// -inf for r == 0.
double Log2(const Rational& r);
double Log2(const BigInt& v);

// A nonnegative dyadic rational num / 2^log2den in lowest terms.
struct Dyadic {
  BigInt num;
  unsigned log2den = 0;
};
// Throws std::invalid_argument when r is negative or not dyadic.
Dyadic ToDyadic(const Rational& r);
Rational FromDyadic(const BigInt& num, unsigned log2den);
// Every finite double is dyadic; exact conversion.
Rational ExactRational(double x);

bool IsDyadic(const Rational& r);

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_NUMERIC_HPP_
