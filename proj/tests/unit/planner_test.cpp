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


#include <random>

#include <gtest/gtest.h>

#include "gf2mul/clmul.hpp"
#include "gf2mul/planner.hpp"
#include "../test_util.hpp"

namespace gf2mul {
namespace {

using testing::random_poly;

constexpr BackendClass kMulti = BackendClass::kMultiLane;
constexpr BackendClass k128 = BackendClass::k128Lane;

TEST(PlanFor, SmallTargetsUseKaratRec) {
  const MulPlan p = plan_for(1000, k128);
  EXPECT_EQ(p.kind(), PlanKind::kKaratRec);
  EXPECT_EQ(p.bits(), 1024u);
  EXPECT_EQ(plan_for(1, kMulti).kind(), PlanKind::kKernel);
  EXPECT_EQ(plan_for(512, kMulti).bits(), 512u);
}

TEST(PlanFor, RingSizes) {
  for (BackendClass cls : {k128, kMulti}) {
    EXPECT_EQ(serialize(plan_for(17669, cls)).substr(0, 31), "toom3[w=64](karat3(karatrec(ker");
    EXPECT_EQ(plan_for(17669, cls).bits(), 18048u);
    EXPECT_EQ(plan_for(35851, cls).bits(), 36480u);
    EXPECT_EQ(plan_for(35851, cls).w_bits(), 64u);
  }
  const MulPlan multi = plan_for(57637, kMulti);
  EXPECT_EQ(multi.bits(), 58368u);
  EXPECT_EQ(multi.w_bits(), 512u);
  EXPECT_EQ(multi.child()->kind(), PlanKind::kKarat5);
  const MulPlan narrow = plan_for(57637, k128);
  EXPECT_EQ(narrow.bits(), 59904u);
  EXPECT_EQ(narrow.w_bits(), 256u);
}

TEST(PlanFor, KernelFollowsClass) {
  EXPECT_EQ(plan_for(4096, kMulti).kernel_variant(), KernelVariant::kKarat512SB);
  EXPECT_EQ(plan_for(4096, k128).kernel_variant(), KernelVariant::kKarat512K128);
}

TEST(PlanFor, LargeTargetsLeaveToom) {
  EXPECT_EQ(plan_for(131072, kMulti).kind(), PlanKind::kKaratRec);
  EXPECT_EQ(plan_for(131072, kMulti).bits(), 131072u);
  EXPECT_EQ(plan_for(98304, kMulti).bits(), 98304u);
}

TEST(PlanFor, RejectsOutsideEnvelope) {
  EXPECT_THROW(plan_for(0, kMulti), SizeError);
  EXPECT_THROW(plan_for(262145, kMulti), SizeError);
  EXPECT_NO_THROW(plan_for(262144, kMulti));
}

TEST(PlanFor, DeterministicTotalAndBounded) {
  std::mt19937_64 rng(61);
  std::vector<std::size_t> targets;
  for (std::size_t t = 1; t <= 262144; t = t * 5 / 4 + 1) targets.push_back(t);
  for (int i = 0; i < 200; ++i) targets.push_back(1 + rng() % 262144);
  for (std::size_t t : targets) {
    for (BackendClass cls : {k128, kMulti}) {
      const MulPlan p = plan_for(t, cls);
      ASSERT_EQ(p, plan_for(t, cls));
      ASSERT_GE(p.bits(), t);
      // The kernel alone is 512 bits, so the 2x bound starts there.
      if (t >= 256) ASSERT_LE(p.bits(), 2 * t) << t;
    }
  }
}

TEST(Estimate, PureKaratRec) {
  const MulPlan p = MulPlan::karat_rec(MulPlan::word(), 256);
  EXPECT_EQ(estimate(p), (CostEstimate{9, 72}));
}

TEST(Estimate, Kernel) {
  EXPECT_EQ(estimate(MulPlan::kernel(KernelVariant::kKarat512SB)).base_muls, 48u);
  EXPECT_EQ(estimate(MulPlan::kernel(KernelVariant::kSB512)).base_muls, 64u);
  EXPECT_EQ(estimate(MulPlan::kernel(KernelVariant::kKarat512K128)).base_muls, 36u);
}

TEST(Estimate, ToomOverKarat3) {
  const MulPlan p = parse_plan("toom3[w=64](karat3(karatrec(kernel:karat512_sb)))@18048");
  EXPECT_EQ(estimate(p).base_muls, 5u * 6u * 9u * 48u);
  EXPECT_EQ(estimate(p).base_muls, 12960u);
}

TEST(Estimate, TableXorForms) {
  // Karat3: 48 (t/3)^log2 3, Karat5: 120 (t/5)^log2 3 with one-word leaves.
  EXPECT_EQ(estimate(MulPlan::karat3(MulPlan::karat_rec(MulPlan::word(), 256))).xor64, 48u * 9u);
  EXPECT_EQ(estimate(MulPlan::karat5(MulPlan::karat_rec(MulPlan::word(), 128))).xor64, 120u * 3u);
}

TEST(Estimate, MatchesExecutedCounts) {
  std::mt19937_64 rng(62);
  const char* plan_texts[] = {
      "kernel:sb512",
      "karatrec(kernel:karat512_sb)@4096",
      "karat3(karatrec(kernel:karat512_k128))@3072",
      "karat5(karat3(kernel:sb512))",
      "toom3[w=64](karat3(karatrec(kernel:karat512_sb)))@18048",
      "toom3[w=512](karat5(karatrec(kernel:karat512_sb)))@58368",
      "toom3[w=256](toom3[w=64](karatrec(kernel:karat512_k128)))@71040",
  };
  for (const char* s : plan_texts) {
    const MulPlan p = parse_plan(s);
    const MultiplierPtr m = build(p);
    MulCounters c;
    multiply(*m, random_poly(rng, m->words()), random_poly(rng, m->words()), c);
    EXPECT_EQ(c.base_mul_count, estimate(p).base_muls) << s;
  }
  for (std::size_t target : {1000, 5000, 17669, 35851, 57637, 100000, 131072}) {
    for (BackendClass cls : {k128, kMulti}) {
      const MulPlan p = plan_for(target, cls);
      const MultiplierPtr m = build(p);
      MulCounters c;
      multiply(*m, random_poly(rng, m->words()), random_poly(rng, m->words()), c);
      EXPECT_EQ(c.base_mul_count, estimate(p).base_muls) << serialize(p);
    }
  }
}

TEST(Explain, ToomChain) {
  const std::string text = explain(plan_for(17669, kMulti));
  EXPECT_NE(text.find("Toom3(w=64) 18048 ← Karat3 6144 ← KaratRec 2048 ← Kernel 512"),
            std::string::npos)
      << text;
}

TEST(Explain, KernelOnlyIsOneLine) {
  const std::string text = explain(MulPlan::kernel(KernelVariant::kSB512));
  EXPECT_EQ(text, "Kernel 512");
}

TEST(Explain, NestedIsTwoLines) {
  const std::string text = explain(parse_plan("karat5(karat3(kernel:karat512_sb))"));
  EXPECT_EQ(text,
            "Karat5 7680 ← Karat3 1536 ← Kernel 512\n"
            "karat5(karat3(kernel:karat512_sb))@7680  base_muls=4320");
}

TEST(Serialize, Grammar) {
  const MulPlan p = MulPlan::toom3(
      MulPlan::karat3(MulPlan::karat_rec(MulPlan::kernel(KernelVariant::kKarat512SB), 2048)), 64);
  EXPECT_EQ(serialize(p), "toom3[w=64](karat3(karatrec(kernel:karat512_sb)))@18048");
}

TEST(Serialize, RoundTrip) {
  for (std::size_t t : {1, 700, 1343, 1344, 9000, 17669, 35851, 57637, 70000, 122496, 200000}) {
    for (BackendClass cls : {k128, kMulti}) {
      const MulPlan p = plan_for(t, cls);
      EXPECT_EQ(parse_plan(serialize(p)), p) << serialize(p);
    }
  }
}

TEST(Parse, InnerSizesComeFromTheRoot) {
  const MulPlan p = parse_plan("toom3[w=64](karat3(karatrec(kernel:karat512_sb)))@18048");
  EXPECT_EQ(p.child()->bits(), 6144u);
  EXPECT_EQ(p.child()->child()->bits(), 2048u);
  EXPECT_EQ(p.toom_sizing().n, 94u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_plan(""), ParseError);
  EXPECT_THROW(parse_plan("karat7(kernel:sb512)"), ParseError);
  EXPECT_THROW(parse_plan("kernel:sb1024"), ParseError);
  EXPECT_THROW(parse_plan("karat3(kernel:sb512"), ParseError);
  EXPECT_THROW(parse_plan("karatrec(kernel:sb512)"), ParseError);
  EXPECT_THROW(parse_plan("kernel:sb512@512 extra"), ParseError);
  EXPECT_THROW(parse_plan("karatrec(kernel:sb512)@3000"), SizeError);
  EXPECT_THROW(parse_plan("karat3(kernel:sb512)@1024"), SizeError);
  EXPECT_THROW(parse_plan("toom3[w=128](karat3(kernel:sb512))"), SizeError);
}

TEST(Build, MatchesOracle) {
  std::mt19937_64 rng(63);
  for (const char* s : {"karatrec(word)@256", "toom3[w=64](karatrec(word))@1152",
                        "karat3(karat5(kernel:karat512_k128))"}) {
    const MultiplierPtr m = build(parse_plan(s));
    const PolyWords a = random_poly(rng, m->words()), b = random_poly(rng, m->words());
    EXPECT_EQ(multiply(*m, a, b), schoolbook_mul(a, b)) << s;
  }
}

TEST(BackendClass, Names) {
  EXPECT_EQ(parse_backend_class(backend_class_name(kMulti)), kMulti);
  EXPECT_EQ(parse_backend_class(backend_class_name(k128)), k128);
  EXPECT_EQ(backend_class_of(Backend::kMultiLane), kMulti);
  EXPECT_EQ(backend_class_of(Backend::kPortable), k128);
}

}  // namespace
}  // namespace gf2mul
