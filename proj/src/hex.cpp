// Copyright 2026 The gf2mul Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include "gf2mul/poly.hpp"

namespace gf2mul {
namespace {

constexpr char kDigits[] = "0123456789abcdef";
constexpr std::size_t kDigitsPerWord = 16;

int digit_value(char c, bool allow_upper) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (allow_upper && c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<Word> decode_words(std::string_view hex, bool allow_upper) {
  const std::size_t n = hex.size() / kDigitsPerWord;
  std::vector<Word> words(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Word w = 0;
    for (std::size_t d = 0; d < kDigitsPerWord; ++d) {
      const char c = hex[k * kDigitsPerWord + d];
      const int v = digit_value(c, allow_upper);
      if (v < 0) throw ParseError(std::string("invalid hex digit '") + c + "'");
      w = (w << 4) | static_cast<Word>(v);
    }
    words[n - 1 - k] = w;
  }
  return words;
}

}  // namespace

std::string to_hex(std::span<const Word> words) {
  std::string out;
  out.reserve(words.size() * kDigitsPerWord);
  for (std::size_t j = words.size(); j-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kDigits[(words[j] >> shift) & 0xF]);
  }
  return out;
}

std::vector<Word> parse_hex(std::string_view hex) {
  if (hex.empty() || hex.size() % kDigitsPerWord != 0) {
    throw ParseError("hex length must be a positive multiple of 16 digits, got " +
                     std::to_string(hex.size()));
  }
  return decode_words(hex, /*allow_upper=*/false);
}

std::vector<Word> parse_hex_lenient(std::string_view hex) {
  while (!hex.empty() && (hex.front() == ' ' || hex.front() == '\t')) hex.remove_prefix(1);
  while (!hex.empty() && (hex.back() == ' ' || hex.back() == '\t' || hex.back() == '\n' ||
                          hex.back() == '\r')) {
    hex.remove_suffix(1);
  }
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
  if (hex.empty()) throw ParseError("empty hex string");
  const std::size_t padded = (hex.size() + kDigitsPerWord - 1) / kDigitsPerWord * kDigitsPerWord;
  std::string full(padded - hex.size(), '0');
  full.append(hex);
  return decode_words(full, /*allow_upper=*/true);
}

}  // namespace gf2mul
