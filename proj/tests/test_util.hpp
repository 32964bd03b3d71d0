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


// Shared helpers for the test binaries.

#ifndef GF2MUL_TESTS_TEST_UTIL_HPP_
#define GF2MUL_TESTS_TEST_UTIL_HPP_

#include <atomic>
#include <random>
#include <string>

#include "gf2mul/multiplier.hpp"
#include "gf2mul/poly.hpp"

namespace gf2mul::testing {

inline PolyWords random_poly(std::mt19937_64& rng, std::size_t words) {
  PolyWords p(words);
  for (std::size_t i = 0; i < words; ++i) p[i] = rng();
  return p;
}

// Random polynomial with exactly `bits` significant bits.
inline PolyWords random_bits(std::mt19937_64& rng, std::size_t bits) {
  const std::size_t words = (bits + kWordBits - 1) / kWordBits;
  PolyWords p = random_poly(rng, words);
  if (bits % kWordBits != 0) p[words - 1] &= (Word{1} << (bits % kWordBits)) - 1;
  return p;
}

// Bit-at-a-time shift-and-XOR product. Independent of every word-level path
// in the library; quadratic in bits, so keep it to small operands.
inline WideProduct bitwise_mul(const PolyWords& a, const PolyWords& b) {
  WideProduct r(a.size() + b.size());
  for (std::size_t i = 0; i < a.bit_size(); ++i) {
    if (!a.bit(i)) continue;
    for (std::size_t j = 0; j < b.bit_size(); ++j) {
      if (b.bit(j)) r.set_bit(i + j, !r.bit(i + j));
    }
  }
  return r;
}

// Bitwise reduction of a product mod X^n - 1.
inline PolyWords bitwise_fold(const WideProduct& p, std::size_t n) {
  PolyWords r((n + kWordBits - 1) / kWordBits);
  for (std::size_t i = 0; i < p.bit_size(); ++i) {
    if (p.bit(i)) r.set_bit(i % n, !r.bit(i % n));
  }
  return r;
}

// Forwards to an inner multiplier and counts the calls.
class CountingMultiplier final : public Multiplier {
 public:
  explicit CountingMultiplier(MultiplierPtr inner)
      : Multiplier(inner->words()), inner_(std::move(inner)) {}
  std::size_t scratch_words() const noexcept override { return inner_->scratch_words(); }
  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word> scratch, MulCounters& counters) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    inner_->mul(a, b, out, scratch, counters);
  }
  std::string label() const override { return inner_->label(); }
  std::size_t calls() const noexcept { return calls_.load(); }

 private:
  MultiplierPtr inner_;
  mutable std::atomic<std::size_t> calls_{0};
};

}  // namespace gf2mul::testing

#endif  // GF2MUL_TESTS_TEST_UTIL_HPP_
