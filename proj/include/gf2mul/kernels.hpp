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

// Fixed-size 512-bit (8-word) multipliers.
//
// The three mandatory variants differ only in where schoolbook gives way to
// Karatsuba:
//
//   SB512          schoolbook at 512, 256 and 128 bits        4 * 4^2 = 64 products
//   KARAT512_SB    Karatsuba at 512, schoolbook below          3 * 4^2 = 48 products
//   KARAT512_K128  Karatsuba at 512 and 128, schoolbook at 256 3 * 4*3 = 36 products
//
// Counts are in 64x64 products. A 4-lane instruction counts as four.

#ifndef GF2MUL_KERNELS_HPP_
#define GF2MUL_KERNELS_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "gf2mul/clmul.hpp"

namespace gf2mul {

inline constexpr std::size_t kKernelWords = 8;

enum class KernelVariant {
  kSB512,
  kKarat512SB,
  kKarat512K128,
#if defined(GF2MUL_KARAT512_FULL)
  // Karatsuba at every level; 27 products.
  kKarat512Full,
#endif
};

std::uint64_t expected_base_muls(KernelVariant v);
std::string_view kernel_name(KernelVariant v);
std::optional<KernelVariant> parse_kernel(std::string_view name);

// KARAT512_SB when four products fit in one instruction, KARAT512_K128
// otherwise.
KernelVariant default_kernel(Backend b);

enum class Mul128Kind { kSchoolbook, kKaratsuba };

std::array<Word, 4> mul128_sb(std::span<const Word, 2> a, std::span<const Word, 2> b,
                              MulCounters& counters, Backend backend = default_backend());
std::array<Word, 4> mul128_karat(std::span<const Word, 2> a, std::span<const Word, 2> b,
                                 MulCounters& counters, Backend backend = default_backend());

// Schoolbook over 128-bit halves with the given inner 128-bit multiplier.
std::array<Word, 8> mul256_sb(std::span<const Word, 4> a, std::span<const Word, 4> b,
                              Mul128Kind inner, MulCounters& counters,
                              Backend backend = default_backend());

std::array<Word, 16> mul512(std::span<const Word, 8> a, std::span<const Word, 8> b,
                            KernelVariant variant, MulCounters& counters,
                            Backend backend = default_backend());

}  // namespace gf2mul

#endif  // GF2MUL_KERNELS_HPP_
