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

// Compiled with -mpclmul -msse4.1. Only reached after a runtime CPUID check.

#include <immintrin.h>

#include "kernel_table.hpp"

namespace gf2mul::detail {
namespace {

struct PclmulPolicy {
  static inline void mul(Word a, Word b, Word& lo, Word& hi) {
    const __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
    lo = static_cast<Word>(_mm_cvtsi128_si64(p));
    hi = static_cast<Word>(_mm_extract_epi64(p, 1));
  }
};

#include "kernels_generic.inc"

}  // namespace

const KernelTable& clmul_kernel_table() {
  static const KernelTable table = make_scalar_table<PclmulPolicy>();
  return table;
}

void clmul64_hw(Word a, Word b, Word* lo, Word* hi) { PclmulPolicy::mul(a, b, *lo, *hi); }

void schoolbook_hw(const Word* a, const Word* b, std::size_t t, Word* out) {
  for (std::size_t i = 0; i < 2 * t; ++i) out[i] = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const __m128i ai = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    __m128i carry = _mm_setzero_si128();
    for (std::size_t j = 0; j < t; ++j) {
      const __m128i p = _mm_clmulepi64_si128(ai, _mm_cvtsi64_si128(static_cast<long long>(b[j])), 0x00);
      carry = _mm_xor_si128(carry, p);
      out[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(carry));
      carry = _mm_srli_si128(carry, 8);
    }
    out[i + t] ^= static_cast<Word>(_mm_cvtsi128_si64(carry));
  }
}

}  // namespace gf2mul::detail
