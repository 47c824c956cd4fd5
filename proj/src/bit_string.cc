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

#include "matchgame/bit_string.h"

#include <stdexcept>

namespace matchgame {

BitString::BitString(int width, std::uint64_t value) : width_(width), value_(value) {
  if (width < 1 || width > kMaxWidth) {
    throw std::invalid_argument("bit string width must be in [1, 64], got " + std::to_string(width));
  }
  if ((value & ~mask()) != 0) {
    throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxWidth) {
    throw std::invalid_argument("bit string must have 1 to 64 characters");
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(text) + "'");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), v);
}

int BitString::bit(int i) const {
  if (i < 0 || i >= width_) {
    throw std::out_of_range("bit index " + std::to_string(i) + " outside width " + std::to_string(width_));
  }
  return static_cast<int>((value_ >> (width_ - 1 - i)) & 1);
}

BitString BitString::with_bit(int i, int b) const {
  bit(i);  // range check
  std::uint64_t m = std::uint64_t{1} << (width_ - 1 - i);
  return BitString(width_, b ? (value_ | m) : (value_ & ~m));
}

void BitString::require_same_width(const BitString& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("bit string width mismatch: " + std::to_string(width_) + " vs " +
                                std::to_string(other.width_));
  }
}

BitString BitString::operator^(const BitString& other) const {
  require_same_width(other);
  return BitString(width_, value_ ^ other.value_);
}

BitString BitString::operator&(const BitString& other) const {
  require_same_width(other);
  return BitString(width_, value_ & other.value_);
}

BitString BitString::operator~() const { return BitString(width_, ~value_ & mask()); }

std::string BitString::to_string() const {
  std::string out(static_cast<size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((value_ >> (width_ - 1 - i)) & 1) out[static_cast<size_t>(i)] = '1';
  }
  return out;
}

int dot(const BitString& u, const BitString& v) { return (u & v).popcount() & 1; }

}  // namespace matchgame
