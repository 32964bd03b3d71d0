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


// Multiplication plans: algorithm trees with padded sizes, a deterministic
// size-to-plan rule, and the operation-count cost model.
//
// Plans serialize to a compact grammar, for example
//
//   toom3[w=64](karat3(karatrec(kernel:karat512_sb)))@18048
//
// Only the root carries a size; inner sizes follow from the split rules.

#ifndef GF2MUL_PLANNER_HPP_
#define GF2MUL_PLANNER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gf2mul/multiplier.hpp"
#include "gf2mul/toomcook.hpp"

namespace gf2mul {

// Hardware class a plan is tuned for: one 128-bit carryless multiply per
// instruction, or four lanes per instruction.
enum class BackendClass { k128Lane, kMultiLane };

std::string_view backend_class_name(BackendClass c);
std::optional<BackendClass> parse_backend_class(std::string_view name);
BackendClass backend_class_of(Backend b);

enum class PlanKind { kWord, kKernel, kKaratRec, kKarat3, kKarat5, kToom3 };

class MulPlan {
 public:
  static MulPlan word();
  static MulPlan kernel(KernelVariant v);
  // Halving recursion down to `leaf` (a word or kernel plan). Returns the
  // leaf itself when bits equals the leaf size.
  static MulPlan karat_rec(const MulPlan& leaf, std::size_t bits);
  static MulPlan karat3(const MulPlan& child);
  static MulPlan karat5(const MulPlan& child);
  static MulPlan toom3(const MulPlan& child, std::size_t w_bits);

  PlanKind kind() const noexcept { return kind_; }
  std::size_t bits() const noexcept { return bits_; }
  std::size_t words() const noexcept { return bits_ / kWordBits; }
  const MulPlan* child() const noexcept { return child_.get(); }
  const MulPlan& leaf() const noexcept;
  // Kernel variant of the leaf, if the leaf is a kernel.
  std::optional<KernelVariant> kernel_variant() const noexcept;
  std::size_t w_bits() const noexcept { return w_bits_; }
  ToomSizing toom_sizing() const;  // kToom3 only

  friend bool operator==(const MulPlan& a, const MulPlan& b);

 private:
  MulPlan(PlanKind k, std::size_t bits) : kind_(k), bits_(bits) {}

  PlanKind kind_;
  std::size_t bits_;
  KernelVariant variant_ = KernelVariant::kKarat512SB;
  std::size_t w_bits_ = 0;
  std::shared_ptr<const MulPlan> child_;
};

struct CostEstimate {
  std::uint64_t base_muls = 0;
  std::uint64_t xor64 = 0;
  friend bool operator==(const CostEstimate&, const CostEstimate&) = default;
};

inline constexpr std::size_t kMaxPlanBits = 262144;

// Smallest-padding plan whose operands hold `target_bits` bits. Ties go to
// fewer base multiplications, then to the lexicographically smaller
// serialization. Throws SizeError outside [1, kMaxPlanBits].
MulPlan plan_for(std::size_t target_bits, BackendClass cls);

// Structural operation counts. base_muls matches what executing the plan
// records in MulCounters. xor64 follows the closed forms of the complexity
// table (8 per one-word product, 4 t^2 for a t-word schoolbook kernel), which
// is an upper model, not what the portable code counts.
CostEstimate estimate(const MulPlan& plan);

// Line 1: the algorithm chain, e.g.
//   Toom3(w=64) 18048 ← Karat3 6144 ← KaratRec 2048 ← Kernel 512
// Line 2 (composite plans only): serialized form and base multiplications.
std::string explain(const MulPlan& plan);

std::string serialize(const MulPlan& plan);
// Inverse of serialize. Throws ParseError on malformed text and SizeError on
// sizes that do not split.
MulPlan parse_plan(std::string_view text);

// Executable multiplier for the plan.
MultiplierPtr build(const MulPlan& plan, Backend backend = default_backend());

}  // namespace gf2mul

#endif  // GF2MUL_PLANNER_HPP_
