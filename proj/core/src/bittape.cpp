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

#include "kolmoverify/bittape.hpp"

#include <functional>

#include "kolmoverify/errors.hpp"

namespace kolmoverify {

BitTape BitTape::FromString(std::string_view s) {
  BitTape t;
  t.bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw ParseError("bit string contains '" + std::string(1, c) + "'");
    }
    t.bits_.push_back(c == '1');
  }
  return t;
}

BitTape BitTape::FromHex(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos || s.substr(colon + 1, 2) != "0x") {
    throw ParseError("hex tape must look like <len>:0x<hex>");
  }
  std::size_t len = 0;
  for (char c : s.substr(0, colon)) {
    if (c < '0' || c > '9') throw ParseError("bad hex tape length");
    len = len * 10 + static_cast<std::size_t>(c - '0');
  }
  if (colon == 0) throw ParseError("bad hex tape length");
  std::string_view hex = s.substr(colon + 3);
  if (hex.size() != (len + 3) / 4) throw ParseError("hex digit count does not match length");
  BitTape t(len);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[i];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else throw ParseError("bad hex digit");
    for (int b = 0; b < 4; ++b) {
      std::size_t pos = i * 4 + static_cast<std::size_t>(b);
      bool bit = (v >> (3 - b)) & 1;
      if (pos < len) t.bits_[pos] = bit;
      else if (bit) throw ParseError("nonzero padding in hex tape");
    }
  }
  return t;
}

BitTape BitTape::FromInteger(std::uint64_t value, std::size_t length) {
  BitTape t(length);
  for (std::size_t i = 0; i < length; ++i) {
    t.bits_[i] = (value >> (length - 1 - i)) & 1;
  }
  return t;
}

void BitTape::append(const BitTape& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitTape BitTape::slice(std::size_t pos, std::size_t len) const {
  BitTape t;
  t.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                 bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return t;
}

std::string BitTape::ToString() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string BitTape::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = std::to_string(bits_.size()) + ":0x";
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      v <<= 1;
      if (i + b < bits_.size()) v |= bits_[i + b];
    }
    s.push_back(kDigits[v]);
  }
  return s;
}

std::uint64_t BitTape::ToInteger() const {
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::strong_ordering BitTape::operator<=>(const BitTape& other) const {
  if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
  return bits_ <=> other.bits_;
}

BitTape Concatenate(const std::vector<BitTape>& parts) {
  BitTape out;
  for (const auto& p : parts) out.append(p);
  return out;
}

std::size_t BitTapeHash::operator()(const BitTape& t) const {
  std::size_t h = std::hash<std::size_t>{}(t.size());
  std::uint64_t acc = 0;
  int n = 0;
  for (auto b : t.bits()) {
    acc = (acc << 1) | b;
    if (++n == 64) {
      h ^= std::hash<std::uint64_t>{}(acc) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      acc = 0;
      n = 0;
    }
  }
  h ^= std::hash<std::uint64_t>{}(acc) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace kolmoverify
