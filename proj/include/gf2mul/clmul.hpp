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

#ifndef GF2MUL_CLMUL_HPP_
#define GF2MUL_CLMUL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "gf2mul/poly.hpp"

namespace gf2mul {

// Where the 64x64 carryless multiply comes from.
//   kPortable  - branch-free shift-and-XOR, no hardware requirement.
//   kClmul     - one product per instruction (PCLMULQDQ).
//   kMultiLane - four products per instruction (VPCLMULQDQ on 512-bit regs).
enum class Backend { kPortable, kClmul, kMultiLane };

// Environment variable that forces the portable backend when set to a
// non-empty value other than "0".
inline constexpr const char* kForcePortableEnv = "GF2MUL_FORCE_PORTABLE";

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

// Features of the executing CPU, as detected at startup.
struct CpuFeatures {
  bool clmul = false;
  bool multi_lane = false;
};
CpuFeatures detect_cpu_features();

bool backend_supported(Backend b);

// Most capable supported backend, unless `override_backend` is given (and
// supported) or the force-portable environment variable is set.
Backend backend_select(std::optional<Backend> override_backend = std::nullopt);

// Process-wide default used when callers do not pass a backend. Initialized
// lazily from backend_select(); settable for tests and the CLI.
Backend default_backend();
void set_default_backend(Backend b);

struct Clmul128 {
  Word lo = 0;
  Word hi = 0;
  friend bool operator==(const Clmul128&, const Clmul128&) = default;
};

// Fixed 64-iteration shift-and-XOR; every iteration does the same work.
constexpr Clmul128 clmul64_portable(Word a, Word b) noexcept {
  Word lo = 0;
  Word hi = 0;
  for (unsigned i = 0; i < 64; ++i) {
    const Word mask = Word{0} - ((b >> i) & 1U);
    lo ^= (a << i) & mask;
    hi ^= ((a >> 1) >> (63 - i)) & mask;
  }
  return {lo, hi};
}

Clmul128 clmul64(Word a, Word b, Backend backend);
inline Clmul128 clmul64(Word a, Word b) { return clmul64(a, b, default_backend()); }

// Quadratic word-level convolution with t^2 clmul64 calls. The correctness
// oracle for every other multiplier in the library.
WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b, MulCounters& counters,
                           Backend backend);
WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b, MulCounters& counters);
WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b);

// Span form: out must hold 2 * a.size() words and is overwritten.
void schoolbook_mul_into(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                         MulCounters& counters, Backend backend);

}  // namespace gf2mul

#endif  // GF2MUL_CLMUL_HPP_
