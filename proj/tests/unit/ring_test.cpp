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
#include <sstream>

#include <gtest/gtest.h>

#include "gf2mul/clmul.hpp"
#include "gf2mul/ring.hpp"
#include "../test_util.hpp"

namespace gf2mul {
namespace {

using testing::bitwise_fold;
using testing::bitwise_mul;
using testing::random_bits;

constexpr BackendClass kMulti = BackendClass::kMultiLane;
constexpr BackendClass k128 = BackendClass::k128Lane;

PolyWords oracle_ring(const PolyWords& a, const PolyWords& b, std::size_t n) {
  return fold(schoolbook_mul(a, b).words(), n);
}

TEST(Preset, PlanSizes) {
  for (BackendClass cls : {k128, kMulti}) {
    const RingParams p128 = preset(HqcLevel::k128, cls);
    EXPECT_EQ(p128.n, 17669u);
    EXPECT_EQ(p128.plan.bits(), 18048u);
    EXPECT_EQ(p128.plan.w_bits(), 64u);
    EXPECT_EQ(p128.plan.child()->kind(), PlanKind::kKarat3);
    const RingParams p192 = preset(HqcLevel::k192, cls);
    EXPECT_EQ(p192.n, 35851u);
    EXPECT_EQ(p192.plan.bits(), 36480u);
    EXPECT_EQ(p192.plan.w_bits(), 64u);
  }
  const RingParams multi = preset(HqcLevel::k256, kMulti);
  EXPECT_EQ(multi.n, 57637u);
  EXPECT_EQ(multi.plan.bits(), 58368u);
  EXPECT_EQ(multi.plan.w_bits(), 512u);
  const RingParams narrow = preset(HqcLevel::k256, k128);
  EXPECT_EQ(narrow.plan.bits(), 59904u);
  EXPECT_EQ(narrow.plan.w_bits(), 256u);
  EXPECT_EQ(narrow.plan.child()->kind(), PlanKind::kKarat5);
}

TEST(Preset, LevelNames) {
  for (HqcLevel l : {HqcLevel::k128, HqcLevel::k192, HqcLevel::k256}) {
    EXPECT_EQ(parse_level(level_name(l)), l);
  }
  EXPECT_FALSE(parse_level("hqc-512").has_value());
}

TEST(Fold, MatchesBitwiseFold) {
  std::mt19937_64 rng(71);
  for (std::size_t n : {2, 5, 63, 64, 65, 127, 128, 200, 1000}) {
    const PolyWords a = random_bits(rng, n), b = random_bits(rng, n);
    const WideProduct p = bitwise_mul(a, b);
    EXPECT_EQ(fold(p.words(), n), bitwise_fold(p, n)) << n;
  }
}

TEST(RingMul, IdentityAndWraparound) {
  std::mt19937_64 rng(72);
  for (HqcLevel l : {HqcLevel::k128, HqcLevel::k192, HqcLevel::k256}) {
    const RingParams p = preset(l, backend_class_of(default_backend()));
    const PolyWords a = random_bits(rng, p.n);
    const PolyWords one = PolyWords::monomial(0, p.words());
    EXPECT_EQ(ring_mul(a, one, p), a);
    const PolyWords top = PolyWords::monomial(p.n - 1, p.words());
    const PolyWords x = PolyWords::monomial(1, p.words());
    EXPECT_EQ(ring_mul(top, x, p), one);
  }
}

TEST(RingMul, PresetsMatchOracle) {
  std::mt19937_64 rng(73);
  for (HqcLevel l : {HqcLevel::k128, HqcLevel::k192, HqcLevel::k256}) {
    for (BackendClass cls : {k128, kMulti}) {
      const RingParams p = preset(l, cls);
      const RingMultiplier rm(p);
      for (int i = 0; i < 3; ++i) {
        const PolyWords a = random_bits(rng, p.n), b = random_bits(rng, p.n);
        const PolyWords r = rm.mul(a, b);
        ASSERT_EQ(r.size(), p.words());
        ASSERT_EQ(r, oracle_ring(a, b, p.n)) << level_name(l);
      }
    }
  }
}

TEST(RingMul, ArbitraryN) {
  std::mt19937_64 rng(74);
  for (std::size_t n : {3, 64, 65, 1000, 4099}) {
    const RingParams p = ring_params(n, backend_class_of(default_backend()));
    const PolyWords a = random_bits(rng, n), b = random_bits(rng, n);
    EXPECT_EQ(ring_mul(a, b, p), bitwise_fold(bitwise_mul(a, b), n)) << n;
  }
}

TEST(RingMul, AxiomsSmallN) {
  std::mt19937_64 rng(75);
  for (std::size_t n : {2, 7, 31, 64}) {
    const RingParams p = ring_params(n, BackendClass::kMultiLane);
    for (int i = 0; i < 30; ++i) {
      const PolyWords a = random_bits(rng, n), b = random_bits(rng, n), c = random_bits(rng, n);
      const PolyWords ab = ring_mul(a, b, p);
      ASSERT_EQ(ab, bitwise_fold(bitwise_mul(a, b), n));
      ASSERT_EQ(ab, ring_mul(b, a, p));
      ASSERT_EQ(ring_mul(ab, c, p), ring_mul(a, ring_mul(b, c, p), p));
      ASSERT_EQ(ring_mul(a, b ^ c, p), ab ^ ring_mul(a, c, p));
    }
  }
}

TEST(RingMul, RejectsUnusedBits) {
  const RingParams p = preset(HqcLevel::k128, k128);
  PolyWords a(p.words());
  a.set_bit(p.n, true);
  EXPECT_THROW(ring_mul(a, PolyWords(p.words()), p), SizeError);
  EXPECT_THROW(ring_mul(PolyWords(p.words() + 1), PolyWords(p.words()), p), SizeError);
}

TEST(RingMul, WeightIndependentPath) {
  std::mt19937_64 rng(76);
  const RingParams p = preset(HqcLevel::k128, backend_class_of(default_backend()));
  const RingMultiplier rm(p);
  std::vector<std::uint32_t> support;
  while (support.size() < 75) {
    const auto pos = static_cast<std::uint32_t>(rng() % p.n);
    if (std::find(support.begin(), support.end(), pos) == support.end()) support.push_back(pos);
  }
  const PolyWords sparse = sparse_to_dense(support, p.n);
  const PolyWords dense = random_bits(rng, p.n);
  const PolyWords b = random_bits(rng, p.n);
  MulCounters cs, cd;
  EXPECT_EQ(rm.mul(sparse, b, cs), oracle_ring(sparse, b, p.n));
  rm.mul(dense, b, cd);
  EXPECT_EQ(cs.base_mul_count, cd.base_mul_count);
  EXPECT_EQ(cs.xor64_count, cd.xor64_count);
  EXPECT_EQ(cs.exact_divisions, cd.exact_divisions);
}

TEST(SparseToDense, SetsExactlyTheSupport) {
  const std::vector<std::uint32_t> support = {0, 63, 64, 17668};
  const PolyWords p = sparse_to_dense(support, 17669);
  EXPECT_EQ(p.size(), 277u);
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.bit_size(); ++i) count += p.bit(i);
  EXPECT_EQ(count, 4u);
  for (std::uint32_t s : support) EXPECT_TRUE(p.bit(s));
  const std::vector<std::uint32_t> bad = {17669};
  EXPECT_THROW(sparse_to_dense(bad, 17669), SizeError);
}

TEST(Kat, WriteReadRoundTrip) {
  std::mt19937_64 rng(77);
  std::vector<KatVector> v;
  for (std::size_t t : {1, 3, 8}) {
    const PolyWords a = testing::random_poly(rng, t), b = testing::random_poly(rng, t);
    v.push_back({a, b, schoolbook_mul(a, b)});
  }
  std::stringstream ss;
  ss << "# comment\n\n";
  write_kat(ss, v);
  const std::vector<KatVector> back = read_kat(ss);
  ASSERT_EQ(back.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(back[i].a.vec(), v[i].a.vec());
    EXPECT_EQ(back[i].c.vec(), v[i].c.vec());
  }
}

TEST(Kat, MalformedLines) {
  std::stringstream two("0000000000000001 0000000000000001\n");
  EXPECT_THROW(read_kat(two), ParseError);
  std::stringstream badhex("0000000000000001 000000000000000z 00000000000000000000000000000001\n");
  EXPECT_THROW(read_kat(badhex), ParseError);
}

}  // namespace
}  // namespace gf2mul
