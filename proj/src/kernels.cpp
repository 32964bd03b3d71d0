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

#include "gf2mul/kernels.hpp"

#include <stdexcept>
#include <string>

#include "gf2mul/multiplier.hpp"
#include "kernel_table.hpp"

namespace gf2mul {
namespace {

const detail::KernelTable& table_for(Backend b) {
  if (!backend_supported(b)) b = Backend::kPortable;
  switch (b) {
#if defined(GF2MUL_HAVE_X86_VPCLMUL)
    case Backend::kMultiLane:
      return detail::multilane_kernel_table();
#endif
#if defined(GF2MUL_HAVE_X86_CLMUL)
    case Backend::kClmul:
      return detail::clmul_kernel_table();
#endif
    default:
      return detail::portable_kernel_table();
  }
}

detail::KernelFn mul512_fn(const detail::KernelTable& t, KernelVariant v) {
  switch (v) {
    case KernelVariant::kSB512:
      return t.mul512_sb;
    case KernelVariant::kKarat512SB:
      return t.mul512_karat_sb;
    case KernelVariant::kKarat512K128:
      return t.mul512_karat_k128;
#if defined(GF2MUL_KARAT512_FULL)
    case KernelVariant::kKarat512Full:
      return t.mul512_karat_full;
#endif
  }
  throw std::invalid_argument("unknown kernel variant " + std::to_string(static_cast<int>(v)));
}

class WordLeaf final : public Multiplier {
 public:
  explicit WordLeaf(Backend b) : Multiplier(1), backend_(b) {}
  std::size_t scratch_words() const noexcept override { return 0; }
  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word>, MulCounters& counters) const override {
    const Clmul128 p = clmul64(a[0], b[0], backend_);
    out[0] = p.lo;
    out[1] = p.hi;
    ++counters.base_mul_count;
  }
  std::string label() const override { return "Word 64"; }

 private:
  Backend backend_;
};

class KernelLeaf final : public Multiplier {
 public:
  KernelLeaf(KernelVariant v, Backend b)
      : Multiplier(kKernelWords), fn_(mul512_fn(table_for(b), v)) {}
  std::size_t scratch_words() const noexcept override { return 0; }
  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word>, MulCounters& counters) const override {
    counters.base_mul_count += fn_(a.data(), b.data(), out.data());
  }
  std::string label() const override { return "Kernel 512"; }

 private:
  detail::KernelFn fn_;
};

}  // namespace

std::uint64_t expected_base_muls(KernelVariant v) {
  switch (v) {
    case KernelVariant::kSB512:
      return 64;
    case KernelVariant::kKarat512SB:
      return 48;
    case KernelVariant::kKarat512K128:
      return 36;
#if defined(GF2MUL_KARAT512_FULL)
    case KernelVariant::kKarat512Full:
      return 27;
#endif
  }
  throw std::invalid_argument("unknown kernel variant " + std::to_string(static_cast<int>(v)));
}

std::string_view kernel_name(KernelVariant v) {
  switch (v) {
    case KernelVariant::kSB512:
      return "sb512";
    case KernelVariant::kKarat512SB:
      return "karat512_sb";
    case KernelVariant::kKarat512K128:
      return "karat512_k128";
#if defined(GF2MUL_KARAT512_FULL)
    case KernelVariant::kKarat512Full:
      return "karat512_full";
#endif
  }
  throw std::invalid_argument("unknown kernel variant " + std::to_string(static_cast<int>(v)));
}

std::optional<KernelVariant> parse_kernel(std::string_view name) {
  if (name == "sb512") return KernelVariant::kSB512;
  if (name == "karat512_sb") return KernelVariant::kKarat512SB;
  if (name == "karat512_k128") return KernelVariant::kKarat512K128;
#if defined(GF2MUL_KARAT512_FULL)
  if (name == "karat512_full") return KernelVariant::kKarat512Full;
#endif
  return std::nullopt;
}

KernelVariant default_kernel(Backend b) {
  return b == Backend::kMultiLane ? KernelVariant::kKarat512SB : KernelVariant::kKarat512K128;
}

std::array<Word, 4> mul128_sb(std::span<const Word, 2> a, std::span<const Word, 2> b,
                              MulCounters& counters, Backend backend) {
  std::array<Word, 4> r{};
  counters.base_mul_count += table_for(backend).mul128_sb(a.data(), b.data(), r.data());
  return r;
}

std::array<Word, 4> mul128_karat(std::span<const Word, 2> a, std::span<const Word, 2> b,
                                 MulCounters& counters, Backend backend) {
  std::array<Word, 4> r{};
  counters.base_mul_count += table_for(backend).mul128_karat(a.data(), b.data(), r.data());
  return r;
}

std::array<Word, 8> mul256_sb(std::span<const Word, 4> a, std::span<const Word, 4> b,
                              Mul128Kind inner, MulCounters& counters, Backend backend) {
  std::array<Word, 8> r{};
  const auto& t = table_for(backend);
  const detail::KernelFn fn = inner == Mul128Kind::kSchoolbook ? t.mul256_sb_sb : t.mul256_sb_karat;
  counters.base_mul_count += fn(a.data(), b.data(), r.data());
  return r;
}

std::array<Word, 16> mul512(std::span<const Word, 8> a, std::span<const Word, 8> b,
                            KernelVariant variant, MulCounters& counters, Backend backend) {
  std::array<Word, 16> r{};
  counters.base_mul_count += mul512_fn(table_for(backend), variant)(a.data(), b.data(), r.data());
  return r;
}

MultiplierPtr make_word_leaf(Backend backend) { return std::make_shared<WordLeaf>(backend); }

MultiplierPtr make_kernel_leaf(KernelVariant variant, Backend backend) {
  return std::make_shared<KernelLeaf>(variant, backend);
}

WideProduct multiply(const Multiplier& m, const PolyWords& a, const PolyWords& b,
                     MulCounters& counters) {
  if (a.size() != m.words() || b.size() != m.words()) {
    throw SizeError(m.label() + " multiplies " + std::to_string(m.words()) +
                    "-word operands, got " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  std::vector<Word> scratch(m.scratch_words());
  WideProduct r(2 * m.words());
  m.mul(a.words(), b.words(), r.words(), scratch, counters);
  return r;
}

WideProduct multiply(const Multiplier& m, const PolyWords& a, const PolyWords& b) {
  MulCounters c;
  return multiply(m, a, b, c);
}

WideProduct multiply_padded(const Multiplier& m, const PolyWords& a, const PolyWords& b,
                            MulCounters& counters) {
  const std::size_t len = std::max(a.size(), b.size());
  if (len > m.words()) {
    throw SizeError("operands of " + std::to_string(len) + " words exceed " + m.label());
  }
  const WideProduct full = multiply(m, a.resized(m.words()), b.resized(m.words()), counters);
  return full.resized(2 * len);
}

}  // namespace gf2mul
