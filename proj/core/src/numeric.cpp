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

#include "kolmoverify/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace kolmoverify {

namespace mp = boost::multiprecision;

BigInt Pow2(unsigned k) {
  BigInt v = 1;
  v <<= k;
  return v;
}

BigInt PowInt(unsigned base, unsigned exponent) {
  return mp::pow(BigInt(base), exponent);
}

BigInt Binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

// log2 of a positive integer split as exponent + log2(mantissa in [1, 2)),
// so callers can add integer offsets before the single final rounding.
struct SplitLog2 {
  long exponent;
  double fraction;
};

SplitLog2 ScaledLog2(const BigInt& v) {
  const unsigned msb = mp::msb(v);
  BigInt top = msb > 62 ? BigInt(v >> (msb - 62)) : BigInt(v << (62 - msb));
  const double mant = std::ldexp(top.convert_to<double>(), -62);
  return {static_cast<long>(msb), std::log2(mant)};
}

}  // namespace

double Log2(const BigInt& v) {
  if (v < 0) throw std::domain_error("log2 of negative");
  if (v == 0) return -std::numeric_limits<double>::infinity();
  SplitLog2 s = ScaledLog2(v);
  return static_cast<double>(s.exponent) + s.fraction;
}

double Log2(const Rational& r) {
  if (r < 0) throw std::domain_error("log2 of negative");
  if (r == 0) return -std::numeric_limits<double>::infinity();
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  // Combine in one quotient to avoid cancellation between two large logs.
  long shift = 64 + static_cast<long>(mp::msb(den)) - static_cast<long>(mp::msb(num));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  SplitLog2 s = ScaledLog2(q);
  return static_cast<double>(s.exponent - shift) + s.fraction;
}

double ToDouble(const Rational& r) {
  if (r == 0) return 0.0;
  bool neg = r < 0;
  Rational a = neg ? Rational(-r) : r;
  BigInt num = mp::numerator(a);
  BigInt den = mp::denominator(a);
  long shift = 64 + static_cast<long>(mp::msb(den)) - static_cast<long>(mp::msb(num));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return neg ? -v : v;
}

bool IsDyadic(const Rational& r) {
  BigInt den = mp::denominator(r);
  return (den & (den - 1)) == 0;
}

Dyadic ToDyadic(const Rational& r) {
  if (r < 0) throw std::invalid_argument("negative dyadic");
  if (!IsDyadic(r)) throw std::invalid_argument("rational is not dyadic");
  Dyadic d;
  d.num = mp::numerator(r);
  d.log2den = static_cast<unsigned>(mp::msb(mp::denominator(r)));
  return d;
}

Rational FromDyadic(const BigInt& num, unsigned log2den) {
  return Rational(num, Pow2(log2den));
}

Rational ExactRational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0) return 0;
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  int e = exp - 53;
  BigInt num = scaled;
  if (e >= 0) return Rational(num << e);
  return Rational(num, Pow2(static_cast<unsigned>(-e)));
}

}  // namespace kolmoverify
