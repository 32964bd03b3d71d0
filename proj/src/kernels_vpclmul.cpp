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

// Compiled with -mavx512f -mvpclmulqdq -mpclmul. Only reached after a runtime
// CPUID check for AVX512F + VPCLMULQDQ with OS support for ZMM state.
//
// A 256-bit product is computed as four 128x128 products, one per 128-bit
// lane of a ZMM register:
//   lane 0: A0*B0   lane 1: A0*B1   lane 2: A1*B0   lane 3: A1*B1
// where A = A0 + A1*X^128. Each VPCLMULQDQ issues four 64x64 products.

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

inline void spread_operands(const Word* a, const Word* b, __m512i& va, __m512i& vb) {
  const __m512i a4 = _mm512_castsi256_si512(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)));
  const __m512i b4 = _mm512_castsi256_si512(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
  va = _mm512_permutexvar_epi64(_mm512_setr_epi64(0, 1, 0, 1, 2, 3, 2, 3), a4);
  vb = _mm512_permutexvar_epi64(_mm512_setr_epi64(0, 1, 2, 3, 0, 1, 2, 3), b4);
}

// Folds the four lane products (each lo + hi*X^128) into the 8-word result
// R0 + (R1 + R2)*X^128 + R3*X^256.
inline void combine_lanes(__m512i lo, __m512i hi, Word* r) {
  alignas(64) Word l[8];
  alignas(64) Word h[8];
  _mm512_store_si512(reinterpret_cast<__m512i*>(l), lo);
  _mm512_store_si512(reinterpret_cast<__m512i*>(h), hi);
  r[0] = l[0];
  r[1] = l[1];
  r[2] = h[0] ^ l[2] ^ l[4];
  r[3] = h[1] ^ l[3] ^ l[5];
  r[4] = h[2] ^ h[4] ^ l[6];
  r[5] = h[3] ^ h[5] ^ l[7];
  r[6] = h[6];
  r[7] = h[7];
}

// 128-bit schoolbook in every lane: 4 instructions, 16 products.
std::uint64_t mul256_sb_sb_x4(const Word* a, const Word* b, Word* r) {
  __m512i va, vb;
  spread_operands(a, b, va, vb);
  const __m512i p00 = _mm512_clmulepi64_epi128(va, vb, 0x00);
  const __m512i p11 = _mm512_clmulepi64_epi128(va, vb, 0x11);
  const __m512i mid = _mm512_xor_si512(_mm512_clmulepi64_epi128(va, vb, 0x01),
                                       _mm512_clmulepi64_epi128(va, vb, 0x10));
  const __m512i zero = _mm512_setzero_si512();
  const __m512i lo = _mm512_xor_si512(p00, _mm512_unpacklo_epi64(zero, mid));
  const __m512i hi = _mm512_xor_si512(p11, _mm512_unpackhi_epi64(mid, zero));
  combine_lanes(lo, hi, r);
  return 16;
}

// 128-bit Karatsuba in every lane: 3 instructions, 12 products.
std::uint64_t mul256_sb_karat_x4(const Word* a, const Word* b, Word* r) {
  __m512i va, vb;
  spread_operands(a, b, va, vb);
  const __m512i p00 = _mm512_clmulepi64_epi128(va, vb, 0x00);
  const __m512i p11 = _mm512_clmulepi64_epi128(va, vb, 0x11);
  // Swap the qwords of each lane and add: both halves then hold a0 ^ a1.
  const __m512i sa = _mm512_xor_si512(va, _mm512_shuffle_epi32(va, _MM_PERM_BADC));
  const __m512i sb = _mm512_xor_si512(vb, _mm512_shuffle_epi32(vb, _MM_PERM_BADC));
  const __m512i pm = _mm512_clmulepi64_epi128(sa, sb, 0x00);
  const __m512i mid = _mm512_xor_si512(pm, _mm512_xor_si512(p00, p11));
  const __m512i zero = _mm512_setzero_si512();
  const __m512i lo = _mm512_xor_si512(p00, _mm512_unpacklo_epi64(zero, mid));
  const __m512i hi = _mm512_xor_si512(p11, _mm512_unpackhi_epi64(mid, zero));
  combine_lanes(lo, hi, r);
  return 12;
}

std::uint64_t mul128_sb_x1(const Word* a, const Word* b, Word* r) {
  return mul128_sb_t<PclmulPolicy>(a, b, r);
}

}  // namespace

const KernelTable& multilane_kernel_table() {
  static const KernelTable table = [] {
    KernelTable t = make_scalar_table<PclmulPolicy>();
    t.mul128_sb = &mul128_sb_x1;
    t.mul256_sb_sb = &mul256_sb_sb_x4;
    t.mul256_sb_karat = &mul256_sb_karat_x4;
    t.mul512_sb = &mul512_sb_t<&mul256_sb_sb_x4>;
    t.mul512_karat_sb = &mul512_karat_t<&mul256_sb_sb_x4>;
    t.mul512_karat_k128 = &mul512_karat_t<&mul256_sb_karat_x4>;
    return t;
  }();
  return table;
}

}  // namespace gf2mul::detail
