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

#ifndef GF2MUL_POLY_HPP_
#define GF2MUL_POLY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gf2mul {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

// Raised when operand sizes do not fit the algorithm's admissible shapes.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact division finds a nonzero remainder. This only happens
// when an upstream computation produced a wrong intermediate.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-call instrumentation. Passed explicitly; never global.
struct MulCounters {
  std::uint64_t base_mul_count = 0;  // 64x64 carryless multiplies
  std::uint64_t xor64_count = 0;     // word XORs in the recursive layers
  std::uint64_t exact_divisions = 0;  // exact divisions checked and passed

  void reset() noexcept { *this = MulCounters{}; }
};

namespace detail {
struct OperandTag {};
struct ProductTag {};
}  // namespace detail

// Dense bit-packed polynomial over F2. Bit i of word j is the coefficient of
// X^(64*j + i). The word count is explicit: trailing zero words are kept.
template <class Tag>
class BitPoly {
 public:
  explicit BitPoly(std::size_t words) : words_(checked(words)) {}
  explicit BitPoly(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) throw SizeError("polynomial must have at least one word");
  }
  BitPoly(std::initializer_list<Word> words) : BitPoly(std::vector<Word>(words)) {}

  static BitPoly monomial(std::size_t degree, std::size_t words) {
    BitPoly p(words);
    p.set_bit(degree, true);
    return p;
  }
  static BitPoly from_span(std::span<const Word> w) {
    return BitPoly(std::vector<Word>(w.begin(), w.end()));
  }

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t bit_size() const noexcept { return words_.size() * kWordBits; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }
  Word operator[](std::size_t i) const { return words_[i]; }
  Word& operator[](std::size_t i) { return words_[i]; }
  const std::vector<Word>& vec() const noexcept { return words_; }

  bool bit(std::size_t i) const {
    if (i >= bit_size()) return false;
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set_bit(std::size_t i, bool v) {
    if (i >= bit_size()) throw SizeError("bit index beyond polynomial length");
    const Word m = Word{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= m;
    } else {
      words_[i / kWordBits] &= ~m;
    }
  }

  bool is_zero() const noexcept {
    Word acc = 0;
    for (Word w : words_) acc |= w;
    return acc == 0;
  }

  // Highest set bit; empty for the zero polynomial. Not constant time.
  std::optional<std::size_t> degree() const {
    for (std::size_t j = words_.size(); j-- > 0;) {
      if (words_[j] != 0) {
        return j * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(__builtin_clzll(words_[j])));
      }
    }
    return std::nullopt;
  }

  // Zero-extends or truncates to `words` words.
  BitPoly resized(std::size_t words) const {
    BitPoly r(words);
    for (std::size_t i = 0; i < std::min(words, size()); ++i) r.words_[i] = words_[i];
    return r;
  }

  BitPoly& operator^=(const BitPoly& o) {
    if (o.size() > size()) words_.resize(o.size(), 0);
    for (std::size_t i = 0; i < o.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend BitPoly operator^(BitPoly a, const BitPoly& b) { return a ^= b; }

  // Value equality after zero-padding the shorter operand.
  friend bool operator==(const BitPoly& a, const BitPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Word x = i < a.size() ? a.words_[i] : 0;
      const Word y = i < b.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

 private:
  static std::vector<Word> checked(std::size_t words) {
    if (words == 0) throw SizeError("polynomial must have at least one word");
    return std::vector<Word>(words, 0);
  }

  std::vector<Word> words_;
};

// Operand polynomial, t words.
using PolyWords = BitPoly<detail::OperandTag>;
// Product of two t-word operands, 2t words.
using WideProduct = BitPoly<detail::ProductTag>;

inline PolyWords as_operand(const WideProduct& p) { return PolyWords(p.vec()); }
inline WideProduct as_product(const PolyWords& p) { return WideProduct(p.vec()); }

// Lowercase hex, most significant word first, 16 digits per word, no
// separators. parse_hex is the exact inverse and rejects anything else.
std::string to_hex(std::span<const Word> words);
std::vector<Word> parse_hex(std::string_view hex);

// Accepts any hex digit string (either case, optional 0x prefix) and
// left-pads it to whole words. For user-provided input files.
std::vector<Word> parse_hex_lenient(std::string_view hex);

template <class Tag>
std::string to_hex(const BitPoly<Tag>& p) {
  return to_hex(p.words());
}

}  // namespace gf2mul

#endif  // GF2MUL_POLY_HPP_
