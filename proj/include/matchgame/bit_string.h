// Copyright 2026 The Matchgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHGAME_BIT_STRING_H_
#define MATCHGAME_BIT_STRING_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace matchgame {

/// A fixed-width binary word of at most 64 bits.
///
/// Characters are indexed from the left: `bit(0)` is the first character of the
/// textual form and also the most significant bit of `value()`. With this
/// convention Alice's input x = x_0 x_1 ... x_{m-1} has x_i == bit(i), and the
/// lexicographic order of strings coincides with the numeric order of values.
class BitString {
 public:
  static constexpr int kMaxWidth = 64;

  BitString() = default;
  /// Throws std::invalid_argument if width is outside [1, 64] or value has
  /// bits above the width.
  BitString(int width, std::uint64_t value);

  /// Parses contiguous '0'/'1' characters, most significant first.
  static BitString parse(std::string_view text);
  static BitString zeros(int width) { return BitString(width, 0); }

  int width() const { return width_; }
  std::uint64_t value() const { return value_; }

  /// Character at position i (0 = leftmost).
  int bit(int i) const;
  /// Returns a copy with character i set to b.
  BitString with_bit(int i, int b) const;
  int popcount() const { return std::popcount(value_); }

  BitString operator^(const BitString& other) const;
  BitString operator&(const BitString& other) const;
  BitString operator~() const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString&, const BitString&) = default;

 private:
  std::uint64_t mask() const {
    return width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
  }
  void require_same_width(const BitString& other) const;

  int width_ = 0;
  std::uint64_t value_ = 0;
};

/// XOR over positionwise ANDs. Throws std::invalid_argument on width mismatch.
int dot(const BitString& u, const BitString& v);

/// Parity of the set bits of a raw word; the word-level form of `dot`.
inline int parity(std::uint64_t w) { return std::popcount(w) & 1; }

}  // namespace matchgame

#endif  // MATCHGAME_BIT_STRING_H_
