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


#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "gf2mul/clmul.hpp"
#include "gf2mul/poly.hpp"
#include "../test_util.hpp"

namespace gf2mul {
namespace {

using testing::bitwise_mul;
using testing::random_poly;

TEST(Clmul64, ZeroAnnihilates) {
  EXPECT_EQ(clmul64_portable(0, 0xDEADBEEFCAFEF00DULL), (Clmul128{0, 0}));
  EXPECT_EQ(clmul64(0x1234, 0, Backend::kPortable), (Clmul128{0, 0}));
}

TEST(Clmul64, OneIsIdentity) {
  const Word b = 0x8000000000000001ULL;
  EXPECT_EQ(clmul64_portable(1, b), (Clmul128{b, 0}));
}

TEST(Clmul64, SmallProduct) {
  // (X^2 + 1)(X + 1) = X^3 + X^2 + X + 1
  EXPECT_EQ(clmul64_portable(0x5, 0x3), (Clmul128{0xF, 0}));
  static_assert(clmul64_portable(0x5, 0x3).lo == 0xF);
}

TEST(Clmul64, TopBitsSquare) {
  // X^63 * X^63 = X^126
  EXPECT_EQ(clmul64_portable(Word{1} << 63, Word{1} << 63), (Clmul128{0, Word{1} << 62}));
}

TEST(Clmul64, MatchesBitwiseOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word a = rng(), b = rng();
    const WideProduct ref = bitwise_mul(PolyWords{a}, PolyWords{b});
    const Clmul128 p = clmul64_portable(a, b);
    ASSERT_EQ(p.lo, ref[0]);
    ASSERT_EQ(p.hi, ref[1]);
  }
}

TEST(Clmul64, BackendsAgree) {
  std::mt19937_64 rng(12);
  for (Backend be : {Backend::kClmul, Backend::kMultiLane}) {
    if (!backend_supported(be)) continue;
    for (int i = 0; i < 100000; ++i) {
      const Word a = rng(), b = rng();
      ASSERT_EQ(clmul64(a, b, be), clmul64_portable(a, b)) << backend_name(be);
    }
  }
}

TEST(BackendSelect, PortableAlwaysSupported) { EXPECT_TRUE(backend_supported(Backend::kPortable)); }

TEST(BackendSelect, OverrideHonored) {
  EXPECT_EQ(backend_select(Backend::kPortable), Backend::kPortable);
}

TEST(BackendSelect, EnvironmentForcesPortable) {
  ASSERT_EQ(setenv(kForcePortableEnv, "1", 1), 0);
  EXPECT_EQ(backend_select(), Backend::kPortable);
  EXPECT_EQ(backend_select(Backend::kMultiLane), Backend::kPortable);
  unsetenv(kForcePortableEnv);
}

TEST(BackendSelect, PicksMostCapable) {
  if (std::getenv(kForcePortableEnv) != nullptr) GTEST_SKIP() << "forced portable";
  const CpuFeatures f = detect_cpu_features();
  const Backend want = f.multi_lane ? Backend::kMultiLane : f.clmul ? Backend::kClmul : Backend::kPortable;
  EXPECT_EQ(backend_select(), want);
}

TEST(BackendSelect, NamesRoundTrip) {
  for (Backend b : {Backend::kPortable, Backend::kClmul, Backend::kMultiLane}) {
    EXPECT_EQ(parse_backend(backend_name(b)), b);
  }
  EXPECT_FALSE(parse_backend("avx9000").has_value());
}

TEST(Schoolbook, MonomialTimesOne) {
  const WideProduct r = schoolbook_mul(PolyWords{1}, PolyWords{Word{1} << 63});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r, WideProduct({Word{1} << 63, 0}));
}

TEST(Schoolbook, MatchesBitwiseOracle) {
  std::mt19937_64 rng(13);
  for (std::size_t t : {1, 2, 3, 4, 7}) {
    for (int i = 0; i < 20; ++i) {
      const PolyWords a = random_poly(rng, t), b = random_poly(rng, t);
      for (Backend be : {Backend::kPortable, default_backend()}) {
        MulCounters c;
        ASSERT_EQ(schoolbook_mul(a, b, c, be), bitwise_mul(a, b));
      }
    }
  }
}

TEST(Schoolbook, CountsTSquared) {
  std::mt19937_64 rng(14);
  MulCounters c;
  schoolbook_mul(random_poly(rng, 4), random_poly(rng, 4), c);
  EXPECT_EQ(c.base_mul_count, 16u);
  c.reset();
  EXPECT_EQ(c.base_mul_count, 0u);
  schoolbook_mul(random_poly(rng, 9), random_poly(rng, 9), c);
  EXPECT_EQ(c.base_mul_count, 81u);
}

TEST(Schoolbook, RejectsMismatchedLengths) {
  EXPECT_THROW(schoolbook_mul(PolyWords(2), PolyWords(3)), SizeError);
}

TEST(Schoolbook, Commutative) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    const PolyWords a = random_poly(rng, 13), b = random_poly(rng, 13);
    ASSERT_EQ(schoolbook_mul(a, b), schoolbook_mul(b, a));
  }
}

TEST(Schoolbook, Bilinear) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 50; ++i) {
    const PolyWords a = random_poly(rng, 10), b = random_poly(rng, 10), c = random_poly(rng, 10);
    ASSERT_EQ(schoolbook_mul(a, b ^ c), schoolbook_mul(a, b) ^ schoolbook_mul(a, c));
  }
}

TEST(Schoolbook, DegreeBound) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    PolyWords a = random_poly(rng, 6), b = random_poly(rng, 6);
    a[5] >>= rng() % 64;
    b[5] >>= rng() % 64;
    const auto da = a.degree(), db = b.degree();
    const auto dp = schoolbook_mul(a, b).degree();
    if (!da || !db) continue;
    ASSERT_TRUE(dp.has_value());
    ASSERT_EQ(*dp, *da + *db);  // F2[X] is an integral domain
  }
}

TEST(PolyWords, RejectsZeroLength) {
  EXPECT_THROW(PolyWords(std::size_t{0}), SizeError);
  EXPECT_THROW(PolyWords(std::vector<Word>{}), SizeError);
}

TEST(PolyWords, LengthIsExplicit) {
  const PolyWords p({1, 0, 0});
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.bit_size(), 192u);
  EXPECT_EQ(p.degree(), 0u);
}

TEST(PolyWords, EqualityPadsWithZeros) {
  EXPECT_EQ(PolyWords({5}), PolyWords({5, 0, 0}));
  EXPECT_NE(PolyWords({5}), PolyWords({5, 1}));
}

TEST(PolyWords, MonomialAndBits) {
  const PolyWords m = PolyWords::monomial(130, 3);
  EXPECT_TRUE(m.bit(130));
  EXPECT_EQ(m[2], Word{4});
  EXPECT_FALSE(m.bit(100000));
  EXPECT_THROW(PolyWords::monomial(192, 3), SizeError);
}

TEST(Hex, FixedWidthMostSignificantFirst) {
  EXPECT_EQ(to_hex(PolyWords({0x1, 0xab})), "00000000000000ab0000000000000001");
}

TEST(Hex, StrictRoundTrip) {
  std::mt19937_64 rng(18);
  for (std::size_t t : {1, 2, 5, 17}) {
    const PolyWords p = random_poly(rng, t);
    EXPECT_EQ(PolyWords(parse_hex(to_hex(p))).vec(), p.vec());
  }
}

TEST(Hex, StrictRejects) {
  EXPECT_THROW(parse_hex(""), ParseError);
  EXPECT_THROW(parse_hex("01"), ParseError);
  EXPECT_THROW(parse_hex("000000000000000G"), ParseError);
  EXPECT_THROW(parse_hex("00000000000000AB"), ParseError);
}

TEST(Hex, LenientAcceptsShortForms) {
  EXPECT_EQ(parse_hex_lenient("01"), (std::vector<Word>{1}));
  EXPECT_EQ(parse_hex_lenient("  0xAB\n"), (std::vector<Word>{0xab}));
  EXPECT_EQ(parse_hex_lenient("10000000000000000"), (std::vector<Word>{0, 1}));
  EXPECT_THROW(parse_hex_lenient("xyz"), ParseError);
}

}  // namespace
}  // namespace gf2mul
