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

// Word-aligned Toom-Cook 3-way multiplication over F2[X].
//
// Operands of t = 3n words are split as A = a0 + a1 X^(64n) + a2 X^(128n) and
// evaluated at 0, 1, x, x+1 and infinity with x = X^w. Multiplying by x is a
// shift by w/64 words, so C(x) and C(x+1) need operands of n + 2w/64 words;
// all five products run on one elementary multiplier of that size, with the
// smaller operands zero-padded.
//
// Interpolation needs only XOR, word shifts, and two exact divisions: by x
// (a word shift) and by x+1 (a running XOR over w-bit chunks, which is the
// product with (X^w + 1)^-1 mod X^d = sum_{i < d/w} X^(w i)).

#ifndef GF2MUL_TOOMCOOK_HPP_
#define GF2MUL_TOOMCOOK_HPP_

#include <span>
#include <vector>

#include "gf2mul/multiplier.hpp"

namespace gf2mul {

struct ToomSizing {
  std::size_t n = 0;           // words per third
  std::size_t t = 0;           // total operand words, 3n
  std::size_t w_bits = 0;      // evaluation shift, 64, 256 or 512
  std::size_t elem_words = 0;  // n + 2 w_bits / 64
  std::size_t max_degree = 0;  // 64 t - 1

  std::size_t w_words() const noexcept { return w_bits / kWordBits; }
  std::size_t bits() const noexcept { return t * kWordBits; }
  friend bool operator==(const ToomSizing&, const ToomSizing&) = default;
};

bool is_toom_shift(std::size_t w_bits) noexcept;

// Sizing for a given elementary size: n = elem_words - 2w/64.
ToomSizing toom3_sizing_for_elementary(std::size_t elem_words, std::size_t w_bits);

// Minimal n such that 3n words hold target_degree + 1 bits and n + 2w/64 is
// one of `elementary_words`. Throws SizeError naming the nearest reachable
// target when none fits.
ToomSizing toom3_sizing(std::size_t target_degree, std::size_t w_bits,
                        std::span<const std::size_t> elementary_words);
ToomSizing toom3_sizing(std::size_t target_degree, std::size_t w_bits,
                        const Multiplier& elementary);

struct EvalPoints {
  WideProduct c0;     // a0 b0
  WideProduct c1;     // (a0+a1+a2)(b0+b1+b2)
  WideProduct cx;     // A(x) B(x)
  WideProduct cx1;    // A(x+1) B(x+1)
  WideProduct cinf;   // a2 b2
};

EvalPoints toom3_evaluate(const PolyWords& a, const PolyWords& b, const ToomSizing& s,
                          const Multiplier& elementary, MulCounters& counters);

WideProduct toom3_interpolate(const EvalPoints& e, const ToomSizing& s, MulCounters& counters);

// Operands up to s.t words; shorter ones are zero-padded. Returns 2 s.t words.
WideProduct toom3_mul(const PolyWords& a, const PolyWords& b, const ToomSizing& s,
                      const Multiplier& elementary, MulCounters& counters);

// Toom-3 as a reusable multiplier of 3 (elementary->words() - 2w/64) words.
MultiplierPtr make_toom3(MultiplierPtr elementary, std::size_t w_bits);

// sum_{i < d/w} X^(w i), i.e. (X^w + 1)^-1 mod X^d. d_bits must be a positive
// multiple of w_bits.
PolyWords inverse_series(std::size_t w_bits, std::size_t d_bits);

// Q with Q X^w = P. Throws ExactnessError if the low w bits of P are set.
WideProduct exact_div_x(const WideProduct& p, std::size_t w_bits, MulCounters& counters);
WideProduct exact_div_x(const WideProduct& p, std::size_t w_bits);

// Q with Q (X^w + 1) = P. Throws ExactnessError if X^w + 1 does not divide P.
// Any w_bits >= 1 is accepted; multiples of 64 take the word path.
WideProduct exact_div_x_plus_1(const WideProduct& p, std::size_t w_bits, MulCounters& counters);
WideProduct exact_div_x_plus_1(const WideProduct& p, std::size_t w_bits);

}  // namespace gf2mul

#endif  // GF2MUL_TOOMCOOK_HPP_
