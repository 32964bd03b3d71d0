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

// Internal ABI between the dispatching code and the ISA-specific translation
// units. Deliberately includes nothing but <cstdint>/<cstddef>: the files that
// include it are compiled with extra ISA flags and must not emit shared
// inline functions that the linker could pick for generic code.

#ifndef GF2MUL_SRC_KERNEL_TABLE_HPP_
#define GF2MUL_SRC_KERNEL_TABLE_HPP_

#include <cstddef>
#include <cstdint>

namespace gf2mul::detail {

using Word = std::uint64_t;

// Returns the number of 64x64 carryless products issued.
using KernelFn = std::uint64_t (*)(const Word* a, const Word* b, Word* r);

struct KernelTable {
  KernelFn mul128_sb = nullptr;          // 2x2 words, 4 products
  KernelFn mul128_karat = nullptr;       // 2x2 words, 3 products
  KernelFn mul256_sb_sb = nullptr;       // 4x4 words, 16 products
  KernelFn mul256_sb_karat = nullptr;    // 4x4 words, 12 products
  KernelFn mul512_sb = nullptr;          // 8x8 words, 64 products
  KernelFn mul512_karat_sb = nullptr;    // 8x8 words, 48 products
  KernelFn mul512_karat_k128 = nullptr;  // 8x8 words, 36 products
  KernelFn mul512_karat_full = nullptr;  // 8x8 words, 27 products
};

const KernelTable& portable_kernel_table();

#if defined(GF2MUL_HAVE_X86_CLMUL)
const KernelTable& clmul_kernel_table();
void clmul64_hw(Word a, Word b, Word* lo, Word* hi);
// out[0, 2t) = a * b over t words, single-lane instructions.
void schoolbook_hw(const Word* a, const Word* b, std::size_t t, Word* out);
#endif

#if defined(GF2MUL_HAVE_X86_VPCLMUL)
const KernelTable& multilane_kernel_table();
#endif

}  // namespace gf2mul::detail

#endif  // GF2MUL_SRC_KERNEL_TABLE_HPP_
