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

// Recursive 2-way, 3-way and 5-way Karatsuba over F2[X].
//
// All splits are word aligned, so reconstruction is XOR at fixed word
// offsets. Operation counts with a one-word leaf, t in words:
//
//   KaratRec  t = 2^r      t^log2(3) products, 8 t^log2(3) - 8 t XORs
//   Karat3    t = 3 * 2^r  6 (t/3)^log2(3) products
//   Karat5    t = 5 * 2^r  15 (t/5)^log2(3) products

#ifndef GF2MUL_KARATSUBA_HPP_
#define GF2MUL_KARATSUBA_HPP_

#include <vector>

#include "gf2mul/multiplier.hpp"

namespace gf2mul {

// Halving recursion from `words` down to leaf->words(). Requires
// words = 2^r * leaf->words() with r >= 0.
MultiplierPtr make_karat_rec(MultiplierPtr leaf, std::size_t words);

// One 3-way (6 products) or 5-way (15 products) split over `elementary`.
MultiplierPtr make_karat3(MultiplierPtr elementary);
MultiplierPtr make_karat5(MultiplierPtr elementary);

enum class KaratSplit { kThree = 3, kFive = 5 };

// Builds outer(inner), e.g. Karat3(Karat5). The optional size form rejects
// a `words` that is not split * inner->words().
MultiplierPtr compose(KaratSplit outer, MultiplierPtr inner);
MultiplierPtr compose(KaratSplit outer, MultiplierPtr inner, std::size_t words);

// Smallest 2^r * leaf_words >= min_words.
std::size_t karat_rec_padded_words(std::size_t min_words, std::size_t leaf_words);

// Operation forms. t is taken from the operands, which must match exactly.
WideProduct karat_rec(const PolyWords& a, const PolyWords& b, MultiplierPtr leaf,
                      MulCounters& counters);
WideProduct karat3(const PolyWords& a, const PolyWords& b, MultiplierPtr elementary,
                   MulCounters& counters);
WideProduct karat5(const PolyWords& a, const PolyWords& b, MultiplierPtr elementary,
                   MulCounters& counters);

// Zero-pads both operands to the next admissible KaratRec size, multiplies,
// and truncates the product back to 2 * max(a.size(), b.size()) words.
WideProduct karat_rec_padded(const PolyWords& a, const PolyWords& b, MultiplierPtr leaf,
                             MulCounters& counters);

}  // namespace gf2mul

#endif  // GF2MUL_KARATSUBA_HPP_
