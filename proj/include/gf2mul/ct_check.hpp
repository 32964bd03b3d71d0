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


// Timing-leakage check in the fixed-versus-random style: time a ring
// multiplication on a sparse first operand of fixed weight and on a dense
// random one, in random interleaved order, and compare the two timing
// populations with Welch's t-test. |t| below the threshold passes.

#ifndef GF2MUL_CT_CHECK_HPP_
#define GF2MUL_CT_CHECK_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gf2mul/ring.hpp"

namespace gf2mul {

enum class Verdict { kPass, kFail, kInconclusive };
std::string_view verdict_name(Verdict v);

struct WelchResult {
  double t = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double mean_a = 0;
  double mean_b = 0;
  bool defined = false;  // both populations have >= 2 samples and nonzero variance
};

WelchResult welch_t(std::span<const double> a, std::span<const double> b);

// Drops from both populations every sample above the pooled q-quantile.
void crop_above_quantile(std::vector<double>& a, std::vector<double>& b, double q);

inline constexpr std::size_t kMinCtTrials = 10000;
inline constexpr std::size_t kMinCtClassSamples = 1000;

struct CtConfig {
  HqcLevel level = HqcLevel::k128;
  std::size_t weight = 75;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  Backend backend = default_backend();
  bool control = false;  // both classes dense random
  double threshold = 4.5;
  double crop_quantile = 0.999;
};

struct CtResult {
  Verdict verdict = Verdict::kInconclusive;
  WelchResult welch;
};

// out = f(a, b) for operands of ceil(n/64) words.
using CtTarget =
    std::function<void(std::span<const Word> a, std::span<const Word> b, std::span<Word> out)>;

// Runs the check on the ring multiplication of the configured preset.
CtResult ct_check(const CtConfig& cfg);

// Runs the check on an arbitrary ring multiplication of degree n.
CtResult ct_check_target(const CtTarget& f, std::size_t n, const CtConfig& cfg);

// Reference ring multiplication that skips zero words of `a`, so its running
// time tracks the weight of `a`. Exists to show the check detects leaks.
void leaky_sparse_ring_mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                           std::size_t n, Backend backend = default_backend());

}  // namespace gf2mul

#endif  // GF2MUL_CT_CHECK_HPP_
