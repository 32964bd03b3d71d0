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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gf2mul/clmul.hpp"
#include "gf2mul/karatsuba.hpp"
#include "../test_util.hpp"

namespace gf2mul {
namespace {

using testing::random_poly;

// t^log2(3) for t a power of two.
std::uint64_t pow3_log2(std::size_t t) {
  std::uint64_t r = 1;
  for (; t > 1; t /= 2) r *= 3;
  return r;
}

MultiplierPtr word() { return make_word_leaf(); }
MultiplierPtr kernel() { return make_kernel_leaf(KernelVariant::kKarat512SB); }

TEST(KaratRec, MonomialProduct) {
  const PolyWords x64({0, 1});
  MulCounters c;
  EXPECT_EQ(karat_rec(x64, x64, word(), c), WideProduct({0, 0, 1, 0}));
}

TEST(KaratRec, MatchesOracle1024) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const PolyWords a = random_poly(rng, 16), b = random_poly(rng, 16);
    MulCounters c;
    ASSERT_EQ(karat_rec(a, b, kernel(), c), schoolbook_mul(a, b));
  }
}

TEST(KaratRec, PureRecursionCounts) {
  std::mt19937_64 rng(32);
  for (std::size_t t : {1, 2, 4, 8, 16, 32}) {
    MulCounters c;
    karat_rec(random_poly(rng, t), random_poly(rng, t), word(), c);
    EXPECT_EQ(c.base_mul_count, pow3_log2(t)) << "t=" << t;
    // 4t XORs per level: 8 t^log2(3) - 8 t in total
    EXPECT_EQ(c.xor64_count, 8 * pow3_log2(t) - 8 * t) << "t=" << t;
  }
}

TEST(KaratRec, CountsOverKernel) {
  std::mt19937_64 rng(33);
  MulCounters c;
  karat_rec(random_poly(rng, 32), random_poly(rng, 32), kernel(), c);
  EXPECT_EQ(c.base_mul_count, 9u * 48u);
}

TEST(KaratRec, RejectsInadmissibleSizes) {
  try {
    make_karat_rec(kernel(), 24);
    FAIL() << "expected SizeError";
  } catch (const SizeError& e) {
    EXPECT_NE(std::string(e.what()).find("32"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make_karat_rec(kernel(), 4), SizeError);
  EXPECT_THROW(make_karat_rec(word(), 0), SizeError);
  EXPECT_EQ(make_karat_rec(kernel(), 8)->words(), 8u);
}

TEST(Karat3, PureRecursionCounts) {
  std::mt19937_64 rng(34);
  const std::vector<std::pair<std::size_t, std::uint64_t>> cases = {{6, 18}, {12, 54}, {24, 162}};
  for (auto [t, want] : cases) {
    const MultiplierPtr m = make_karat3(make_karat_rec(word(), t / 3));
    MulCounters c;
    multiply(*m, random_poly(rng, t), random_poly(rng, t), c);
    EXPECT_EQ(c.base_mul_count, want) << "t=" << t;
    EXPECT_EQ(c.base_mul_count, 6 * pow3_log2(t / 3));
  }
}

TEST(Karat3, MatchesOracle6144) {
  std::mt19937_64 rng(35);
  const MultiplierPtr elem = make_karat_rec(kernel(), 32);
  for (int i = 0; i < 20; ++i) {
    const PolyWords a = random_poly(rng, 96), b = random_poly(rng, 96);
    MulCounters c;
    ASSERT_EQ(karat3(a, b, elem, c), schoolbook_mul(a, b));
  }
}

TEST(Karat3, ZeroOperand) {
  std::mt19937_64 rng(36);
  MulCounters c;
  EXPECT_TRUE(karat3(PolyWords(24), random_poly(rng, 24), kernel(), c).is_zero());
}

TEST(Karat3, RejectsIndivisible) {
  MulCounters c;
  EXPECT_THROW(karat3(PolyWords(16), PolyWords(16), kernel(), c), SizeError);
  EXPECT_THROW(karat3(PolyWords(12), PolyWords(12), kernel(), c), SizeError);
}

TEST(Karat5, PureRecursionCounts) {
  std::mt19937_64 rng(37);
  const std::vector<std::pair<std::size_t, std::uint64_t>> cases = {{10, 45}, {20, 135}, {40, 405}};
  for (auto [t, want] : cases) {
    const MultiplierPtr m = make_karat5(make_karat_rec(word(), t / 5));
    MulCounters c;
    multiply(*m, random_poly(rng, t), random_poly(rng, t), c);
    EXPECT_EQ(c.base_mul_count, want) << "t=" << t;
  }
}

TEST(Karat5, MatchesOracle2560) {
  std::mt19937_64 rng(38);
  for (int i = 0; i < 100; ++i) {
    const PolyWords a = random_poly(rng, 40), b = random_poly(rng, 40);
    MulCounters c;
    ASSERT_EQ(karat5(a, b, kernel(), c), schoolbook_mul(a, b));
  }
}

TEST(Karat5, OneIsIdentity) {
  std::mt19937_64 rng(39);
  const PolyWords a = random_poly(rng, 40);
  PolyWords one(40);
  one[0] = 1;
  MulCounters c;
  EXPECT_EQ(karat5(a, one, kernel(), c), as_product(a.resized(80)));
}

TEST(Karat5, RejectsIndivisible) {
  MulCounters c;
  EXPECT_THROW(karat5(PolyWords(16), PolyWords(16), kernel(), c), SizeError);
}

TEST(Compose, Karat3OfKarat3At4608) {
  std::mt19937_64 rng(40);
  const MultiplierPtr m = compose(KaratSplit::kThree, compose(KaratSplit::kThree, kernel()));
  ASSERT_EQ(m->bits(), 4608u);
  for (int i = 0; i < 50; ++i) {
    const PolyWords a = random_poly(rng, 72), b = random_poly(rng, 72);
    ASSERT_EQ(multiply(*m, a, b), schoolbook_mul(a, b));
  }
}

TEST(Compose, MixedOrdersAgreeAt7680) {
  std::mt19937_64 rng(41);
  const MultiplierPtr k35 = compose(KaratSplit::kThree, make_karat5(kernel()), 120);
  const MultiplierPtr k53 = compose(KaratSplit::kFive, make_karat3(kernel()), 120);
  ASSERT_EQ(k35->bits(), 7680u);
  ASSERT_EQ(k53->bits(), 7680u);
  for (int i = 0; i < 20; ++i) {
    const PolyWords a = random_poly(rng, 120), b = random_poly(rng, 120);
    const WideProduct r = multiply(*k35, a, b);
    ASSERT_EQ(r, multiply(*k53, a, b));
    ASSERT_EQ(r, schoolbook_mul(a, b));
  }
}

TEST(Compose, Karat5OfKarat5At12800) {
  std::mt19937_64 rng(42);
  const MultiplierPtr m = make_karat5(make_karat5(kernel()));
  ASSERT_EQ(m->bits(), 12800u);
  for (int i = 0; i < 10; ++i) {
    const PolyWords a = random_poly(rng, 200), b = random_poly(rng, 200);
    ASSERT_EQ(multiply(*m, a, b), schoolbook_mul(a, b));
  }
}

TEST(Compose, RejectsIncompatibleSize) {
  EXPECT_THROW(compose(KaratSplit::kThree, kernel(), 25), SizeError);
}

TEST(Karatsuba, Commutative) {
  std::mt19937_64 rng(43);
  const MultiplierPtr ms[] = {make_karat_rec(kernel(), 64), make_karat3(make_karat_rec(kernel(), 16)),
                              make_karat5(make_karat_rec(kernel(), 16))};
  for (const MultiplierPtr& m : ms) {
    for (int i = 0; i < 10; ++i) {
      const PolyWords a = random_poly(rng, m->words()), b = random_poly(rng, m->words());
      ASSERT_EQ(multiply(*m, a, b), multiply(*m, b, a)) << m->label();
    }
  }
}

TEST(Karatsuba, PaddingSoundness) {
  std::mt19937_64 rng(44);
  for (std::size_t t : {1, 3, 9, 17, 33, 100}) {
    const PolyWords a = random_poly(rng, t), b = random_poly(rng, t);
    MulCounters c;
    const WideProduct r = karat_rec_padded(a, b, kernel(), c);
    EXPECT_EQ(r.size(), 2 * t);
    EXPECT_EQ(r, schoolbook_mul(a, b)) << "t=" << t;
  }
  EXPECT_EQ(karat_rec_padded_words(17, 8), 32u);
  EXPECT_EQ(karat_rec_padded_words(8, 8), 8u);
  EXPECT_EQ(karat_rec_padded_words(3, 1), 4u);
}

TEST(Karatsuba, Labels) {
  EXPECT_EQ(make_karat_rec(kernel(), 32)->label(), "KaratRec 2048");
  EXPECT_EQ(make_karat3(kernel())->label(), "Karat3 1536");
  EXPECT_EQ(make_karat5(kernel())->label(), "Karat5 2560");
}

}  // namespace
}  // namespace gf2mul
