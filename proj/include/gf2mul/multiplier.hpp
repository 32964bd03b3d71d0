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

#ifndef GF2MUL_MULTIPLIER_HPP_
#define GF2MUL_MULTIPLIER_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gf2mul/kernels.hpp"

namespace gf2mul {

// A fixed-size multiplier: two operands of words() words in, 2 * words()
// words out. Instances are immutable and may be shared between threads; all
// mutable state lives in the caller's scratch buffer and counters.
//
// This is the "elementary multiplication" that the recursive algorithms are
// parameterized by.
class Multiplier {
 public:
  virtual ~Multiplier() = default;

  std::size_t words() const noexcept { return words_; }
  std::size_t bits() const noexcept { return words_ * kWordBits; }

  // Scratch needed by one call to mul(), including all nested calls.
  virtual std::size_t scratch_words() const noexcept = 0;

  // out must hold exactly 2 * words() words and is fully overwritten.
  // a, b, out and scratch must not overlap.
  virtual void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                   std::span<Word> scratch, MulCounters& counters) const = 0;

  // e.g. "KaratRec 2048"; one node, no children.
  virtual std::string label() const = 0;

 protected:
  explicit Multiplier(std::size_t words) : words_(words) {}

 private:
  std::size_t words_;
};

using MultiplierPtr = std::shared_ptr<const Multiplier>;

// One 64x64 product per call. Used to run the recursions all the way down to
// single words, which is what the closed-form operation counts describe.
MultiplierPtr make_word_leaf(Backend backend = default_backend());

// 512-bit kernel.
MultiplierPtr make_kernel_leaf(KernelVariant variant, Backend backend = default_backend());

// Reusable scratch and output buffers sized for one multiplier.
class Workspace {
 public:
  explicit Workspace(const Multiplier& m)
      : scratch_(m.scratch_words()), out_(2 * m.words()) {}

  std::span<Word> scratch() noexcept { return scratch_; }
  std::span<Word> out() noexcept { return out_; }

 private:
  std::vector<Word> scratch_;
  std::vector<Word> out_;
};

// Runs m on operands of exactly m.words() words.
WideProduct multiply(const Multiplier& m, const PolyWords& a, const PolyWords& b,
                     MulCounters& counters);
WideProduct multiply(const Multiplier& m, const PolyWords& a, const PolyWords& b);

// Zero-pads shorter operands to m.words(), multiplies, and returns a product
// truncated to 2 * max(a.size(), b.size()) words.
WideProduct multiply_padded(const Multiplier& m, const PolyWords& a, const PolyWords& b,
                            MulCounters& counters);

}  // namespace gf2mul

#endif  // GF2MUL_MULTIPLIER_HPP_
