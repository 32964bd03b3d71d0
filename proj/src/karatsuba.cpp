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

#include "gf2mul/karatsuba.hpp"

#include <array>
#include <string>

namespace gf2mul {
namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

class KaratRec final : public Multiplier {
 public:
  KaratRec(MultiplierPtr leaf, std::size_t words) : Multiplier(words), leaf_(std::move(leaf)) {
    scratch_ = leaf_->scratch_words();
    for (std::size_t t = words; t > leaf_->words(); t /= 2) scratch_ += 2 * t;
  }

  std::size_t scratch_words() const noexcept override { return scratch_; }

  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word> scratch, MulCounters& counters) const override {
    rec(a, b, out, scratch, counters);
  }

  std::string label() const override { return "KaratRec " + std::to_string(bits()); }

 private:
  // R = R0 + (R0 + R1 + R2) X^(64t/2) + R1 X^(64t), with
  // R0 = A0 B0, R1 = A1 B1, R2 = (A0 + A1)(B0 + B1). 4t word XORs per level.
  void rec(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word> scratch, MulCounters& counters) const {
    const std::size_t t = a.size();
    if (t == leaf_->words()) {
      leaf_->mul(a, b, out, scratch, counters);
      return;
    }
    const std::size_t h = t / 2;
    std::span<Word> sa = scratch.subspan(0, h);
    std::span<Word> sb = scratch.subspan(h, h);
    std::span<Word> mid = scratch.subspan(t, t);
    std::span<Word> rest = scratch.subspan(2 * t);
    for (std::size_t i = 0; i < h; ++i) {
      sa[i] = a[i] ^ a[h + i];
      sb[i] = b[i] ^ b[h + i];
    }
    rec(a.first(h), b.first(h), out.first(t), rest, counters);
    rec(a.subspan(h), b.subspan(h), out.subspan(t), rest, counters);
    rec(sa, sb, mid, rest, counters);
    for (std::size_t i = 0; i < t; ++i) mid[i] ^= out[i] ^ out[t + i];
    xor_into(out.subspan(h, t), mid);
    counters.xor64_count += 4 * t;
  }

  MultiplierPtr leaf_;
  std::size_t scratch_ = 0;
};

// Reconstruction tables: coefficient k of the result (at word offset k*m)
// is the XOR of the listed products. Products are numbered singles first
// (R_i = A_i B_i), then pairs (R_ij = (A_i + A_j)(B_i + B_j)) in
// lexicographic order.
struct SplitShape {
  std::size_t parts;
  std::size_t products;
  // pair index -> (i, j), for products >= parts
  std::array<std::array<int, 2>, 10> pairs;
  // coefficient k -> product ids, -1 terminated
  std::array<std::array<int, 8>, 9> terms;
};

// R0 + (R0+R1+R3)X^m + (R0+R1+R2+R4)X^2m + (R1+R2+R5)X^3m + R2 X^4m
// with R3 = R01, R4 = R02, R5 = R12.
constexpr SplitShape kKarat3 = {
    3,
    6,
    {{{0, 1}, {0, 2}, {1, 2}}},
    {{
        {0, -1},
        {0, 1, 3, -1},
        {0, 1, 2, 4, -1},
        {1, 2, 5, -1},
        {2, -1},
    }},
};

// Pair ids: 5=R01 6=R02 7=R03 8=R04 9=R12 10=R13 11=R14 12=R23 13=R24 14=R34.
constexpr SplitShape kKarat5 = {
    5,
    15,
    {{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
    {{
        {0, -1},
        {0, 1, 5, -1},
        {0, 1, 2, 6, -1},
        {0, 1, 2, 3, 7, 9, -1},
        {0, 1, 2, 3, 4, 8, 10, -1},
        {1, 2, 3, 4, 11, 12, -1},
        {3, 2, 4, 13, -1},
        {3, 4, 14, -1},
        {4, -1},
    }},
};

class KaratSplitMul final : public Multiplier {
 public:
  KaratSplitMul(const SplitShape& shape, MultiplierPtr elementary)
      : Multiplier(shape.parts * elementary->words()), shape_(shape), elem_(std::move(elementary)) {
    const std::size_t m = elem_->words();
    const std::size_t pairs = shape_.products - shape_.parts;
    scratch_ = 2 * pairs * m + shape_.products * 2 * m + elem_->scratch_words();
  }

  std::size_t scratch_words() const noexcept override { return scratch_; }

  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word> scratch, MulCounters& counters) const override {
    const std::size_t m = elem_->words();
    const std::size_t p = shape_.parts;
    const std::size_t pairs = shape_.products - p;
    std::span<Word> sums = scratch.subspan(0, 2 * pairs * m);
    std::span<Word> prods = scratch.subspan(2 * pairs * m, shape_.products * 2 * m);
    std::span<Word> rest = scratch.subspan(2 * pairs * m + shape_.products * 2 * m);

    auto product = [&](std::size_t id) { return prods.subspan(id * 2 * m, 2 * m); };

    for (std::size_t i = 0; i < p; ++i) {
      elem_->mul(a.subspan(i * m, m), b.subspan(i * m, m), product(i), rest, counters);
    }
    for (std::size_t q = 0; q < pairs; ++q) {
      const std::size_t i = static_cast<std::size_t>(shape_.pairs[q][0]);
      const std::size_t j = static_cast<std::size_t>(shape_.pairs[q][1]);
      std::span<Word> sa = sums.subspan(2 * q * m, m);
      std::span<Word> sb = sums.subspan((2 * q + 1) * m, m);
      for (std::size_t w = 0; w < m; ++w) {
        sa[w] = a[i * m + w] ^ a[j * m + w];
        sb[w] = b[i * m + w] ^ b[j * m + w];
      }
      elem_->mul(sa, sb, product(p + q), rest, counters);
    }
    counters.xor64_count += 2 * pairs * m;

    for (Word& w : out) w = 0;
    for (std::size_t k = 0; k < 2 * p - 1; ++k) {
      std::span<Word> dst = out.subspan(k * m, 2 * m);
      for (int id : shape_.terms[k]) {
        if (id < 0) break;
        xor_into(dst, product(static_cast<std::size_t>(id)));
        counters.xor64_count += 2 * m;
      }
    }
  }

  std::string label() const override {
    return std::string(shape_.parts == 3 ? "Karat3 " : "Karat5 ") + std::to_string(bits());
  }

 private:
  const SplitShape& shape_;
  MultiplierPtr elem_;
  std::size_t scratch_ = 0;
};

bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

void require_words(const PolyWords& a, const PolyWords& b, std::size_t t, const std::string& what) {
  if (a.size() != t || b.size() != t) {
    throw SizeError(what + ": operands must have " + std::to_string(t) + " words, got " +
                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

std::size_t karat_rec_padded_words(std::size_t min_words, std::size_t leaf_words) {
  if (leaf_words == 0) throw SizeError("leaf must have at least one word");
  std::size_t t = leaf_words;
  while (t < min_words) t *= 2;
  return t;
}

MultiplierPtr make_karat_rec(MultiplierPtr leaf, std::size_t words) {
  const std::size_t lw = leaf->words();
  if (words == 0 || words % lw != 0 || !is_pow2(words / lw)) {
    const std::size_t next = karat_rec_padded_words(std::max<std::size_t>(words, 1), lw);
    const std::size_t prev = next / 2 >= lw ? next / 2 : 0;
    std::string msg = "KaratRec needs t = 2^r * " + std::to_string(lw) + " words, got " +
                      std::to_string(words) + "; admissible paddings: " + std::to_string(next);
    if (prev != 0 && prev != words) msg += " (next below: " + std::to_string(prev) + ")";
    throw SizeError(msg);
  }
  if (words == lw) return leaf;
  return std::make_shared<KaratRec>(std::move(leaf), words);
}

MultiplierPtr make_karat3(MultiplierPtr elementary) {
  return std::make_shared<KaratSplitMul>(kKarat3, std::move(elementary));
}

MultiplierPtr make_karat5(MultiplierPtr elementary) {
  return std::make_shared<KaratSplitMul>(kKarat5, std::move(elementary));
}

MultiplierPtr compose(KaratSplit outer, MultiplierPtr inner) {
  return outer == KaratSplit::kThree ? make_karat3(std::move(inner)) : make_karat5(std::move(inner));
}

MultiplierPtr compose(KaratSplit outer, MultiplierPtr inner, std::size_t words) {
  const std::size_t split = static_cast<std::size_t>(outer);
  if (words != split * inner->words()) {
    throw SizeError("cannot build a " + std::to_string(words) + "-word Karat" +
                    std::to_string(split) + " over " + inner->label() + " (needs " +
                    std::to_string(split * inner->words()) + " words)");
  }
  return compose(outer, std::move(inner));
}

WideProduct karat_rec(const PolyWords& a, const PolyWords& b, MultiplierPtr leaf,
                      MulCounters& counters) {
  require_words(a, b, a.size(), "karat_rec");
  const MultiplierPtr m = make_karat_rec(std::move(leaf), a.size());
  return multiply(*m, a, b, counters);
}

WideProduct karat3(const PolyWords& a, const PolyWords& b, MultiplierPtr elementary,
                   MulCounters& counters) {
  const std::size_t t = a.size();
  if (t % 3 != 0) throw SizeError("karat3: t = " + std::to_string(t) + " is not divisible by 3");
  const MultiplierPtr m = compose(KaratSplit::kThree, std::move(elementary), t);
  require_words(a, b, t, "karat3");
  return multiply(*m, a, b, counters);
}

WideProduct karat5(const PolyWords& a, const PolyWords& b, MultiplierPtr elementary,
                   MulCounters& counters) {
  const std::size_t t = a.size();
  if (t % 5 != 0) throw SizeError("karat5: t = " + std::to_string(t) + " is not divisible by 5");
  const MultiplierPtr m = compose(KaratSplit::kFive, std::move(elementary), t);
  require_words(a, b, t, "karat5");
  return multiply(*m, a, b, counters);
}

WideProduct karat_rec_padded(const PolyWords& a, const PolyWords& b, MultiplierPtr leaf,
                             MulCounters& counters) {
  const std::size_t len = std::max(a.size(), b.size());
  const std::size_t t = karat_rec_padded_words(len, leaf->words());
  const MultiplierPtr m = make_karat_rec(std::move(leaf), t);
  return multiply_padded(*m, a, b, counters);
}

}  // namespace gf2mul
