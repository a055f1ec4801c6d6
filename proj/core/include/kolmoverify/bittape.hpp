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

#ifndef KOLMOVERIFY_BITTAPE_HPP_
#define KOLMOVERIFY_BITTAPE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kolmoverify {

// A fixed-length string of bits. Bit 0 is the first bit read from a tape and
// the first character of the textual form.
class BitTape {
 public:
  BitTape() = default;
  explicit BitTape(std::size_t length) : bits_(length, 0) {}

  // Parses a string over {'0','1'}. Throws ParseError otherwise.
  static BitTape FromString(std::string_view s);
  // Parses the hex dump format "<len>:0x<hex>" (MSB first, zero padded).
  static BitTape FromHex(std::string_view s);
  // The low `length` bits of `value`, most significant first.
  static BitTape FromInteger(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool b) { bits_[i] = b ? 1 : 0; }
  void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
  void append(const BitTape& other);

  BitTape slice(std::size_t pos, std::size_t len) const;

  std::string ToString() const;
  std::string ToHex() const;
  // Value of the tape as an unsigned integer (first bit most significant).
  // Requires size() <= 64.
  std::uint64_t ToInteger() const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BitTape&) const = default;
  // Shorter tapes order first; equal lengths order lexicographically.
  std::strong_ordering operator<=>(const BitTape& other) const;

 private:
  std::vector<std::uint8_t> bits_;
};

BitTape Concatenate(const std::vector<BitTape>& parts);

struct BitTapeHash {
  std::size_t operator()(const BitTape& t) const;
};

}  // namespace kolmoverify

#endif  // KOLMOVERIFY_BITTAPE_HPP_
