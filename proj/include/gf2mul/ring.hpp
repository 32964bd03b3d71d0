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


// Multiplication in F2[X]/(X^N - 1).
//
// The dense 2N-1 bit product comes from a planned multiplier and is folded
// once: bits at positions >= N wrap around onto the low N bits. Both operands
// are processed as dense polynomials whatever their weight.

#ifndef GF2MUL_RING_HPP_
#define GF2MUL_RING_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gf2mul/planner.hpp"

namespace gf2mul {

enum class HqcLevel { k128, k192, k256 };

std::string_view level_name(HqcLevel level);  // "hqc-128", ...
std::optional<HqcLevel> parse_level(std::string_view name);
std::size_t level_n(HqcLevel level);          // 17669, 35851, 57637

struct RingParams {
  std::size_t n = 0;  // ring degree in bits
  MulPlan plan = MulPlan::word();

  std::size_t words() const noexcept { return (n + kWordBits - 1) / kWordBits; }
};

// Planner-chosen parameters for an arbitrary N.
RingParams ring_params(std::size_t n, BackendClass cls);

// hqc-128 and hqc-192: Toom3(Karat3) at 18048 and 36480 bits, w = 64.
// hqc-256: Toom3(Karat5) at 58368 bits with w = 512 on multi-lane hardware,
// 59904 bits with w = 256 otherwise.
RingParams preset(HqcLevel level, BackendClass cls);

// Reduces a product of degree < 2N modulo X^N - 1.
PolyWords fold(std::span<const Word> product, std::size_t n);

// A ring multiplier with its plan built once.
class RingMultiplier {
 public:
  explicit RingMultiplier(RingParams params, Backend backend = default_backend());

  const RingParams& params() const noexcept { return params_; }
  const Multiplier& multiplier() const noexcept { return *mul_; }

  // Operands of params().words() words with the bits above N clear; throws
  // SizeError otherwise.
  PolyWords mul(const PolyWords& a, const PolyWords& b, MulCounters& counters) const;
  PolyWords mul(const PolyWords& a, const PolyWords& b) const;

  // Allocation-free form. out holds params().words() words; ws must come
  // from this multiplier's plan.
  void mul_into(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                Workspace& ws, std::span<Word> padded_a, std::span<Word> padded_b,
                MulCounters& counters) const;

 private:
  RingParams params_;
  MultiplierPtr mul_;
};

PolyWords ring_mul(const PolyWords& a, const PolyWords& b, const RingParams& p,
                   MulCounters& counters, Backend backend = default_backend());
PolyWords ring_mul(const PolyWords& a, const PolyWords& b, const RingParams& p);

// Dense polynomial with bits set at the given positions (all < n, distinct).
// The memory access pattern depends only on support.size() and n.
PolyWords sparse_to_dense(std::span<const std::uint32_t> support, std::size_t n);

// Known-answer vectors, one `A_hex B_hex C_hex` line each, C = A * B dense.
// Blank lines and lines starting with '#' are skipped.
struct KatVector {
  PolyWords a;
  PolyWords b;
  WideProduct c;
};

std::vector<KatVector> read_kat(std::istream& in);
void write_kat(std::ostream& out, std::span<const KatVector> vectors);

}  // namespace gf2mul

#endif  // GF2MUL_RING_HPP_
