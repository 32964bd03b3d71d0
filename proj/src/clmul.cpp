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

#include "gf2mul/clmul.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernel_table.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <cpuid.h>
#endif

namespace gf2mul {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kPortable:
      return "portable";
    case Backend::kClmul:
      return "clmul";
    case Backend::kMultiLane:
      return "multilane";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "portable") return Backend::kPortable;
  if (name == "clmul") return Backend::kClmul;
  if (name == "multilane") return Backend::kMultiLane;
  return std::nullopt;
}

namespace {

#if defined(__x86_64__) || defined(__i386__)
std::uint64_t read_xcr0() {
  std::uint32_t eax = 0;
  std::uint32_t edx = 0;
  __asm__ volatile("xgetbv" : "=a"(eax), "=d"(edx) : "c"(0));
  return (static_cast<std::uint64_t>(edx) << 32) | eax;
}
#endif

CpuFeatures probe() {
  CpuFeatures f;
#if defined(__x86_64__) || defined(__i386__)
  unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
  if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return f;
  const bool pclmul = (ecx >> 1) & 1U;
  const bool osxsave = (ecx >> 27) & 1U;
  f.clmul = pclmul;
#if defined(GF2MUL_HAVE_X86_VPCLMUL)
  if (pclmul && osxsave && __get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) {
    const bool avx512f = (ebx >> 16) & 1U;
    const bool vpclmul = (ecx >> 10) & 1U;
    // XMM, YMM, opmask, ZMM_Hi256, Hi16_ZMM state enabled by the OS.
    const bool zmm_state = (read_xcr0() & 0xE6) == 0xE6;
    f.multi_lane = avx512f && vpclmul && zmm_state;
  }
#else
  (void)osxsave;
#endif
#endif
#if !defined(GF2MUL_HAVE_X86_CLMUL)
  f.clmul = false;
#endif
  return f;
}

bool env_forces_portable() {
  const char* v = std::getenv(kForcePortableEnv);
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

std::atomic<int> g_default_backend{-1};

}  // namespace

CpuFeatures detect_cpu_features() {
  static const CpuFeatures features = probe();
  return features;
}

bool backend_supported(Backend b) {
  const CpuFeatures f = detect_cpu_features();
  switch (b) {
    case Backend::kPortable:
      return true;
    case Backend::kClmul:
      return f.clmul;
    case Backend::kMultiLane:
      return f.multi_lane;
  }
  return false;
}

Backend backend_select(std::optional<Backend> override_backend) {
  if (env_forces_portable()) return Backend::kPortable;
  if (override_backend) {
    return backend_supported(*override_backend) ? *override_backend : Backend::kPortable;
  }
  if (backend_supported(Backend::kMultiLane)) return Backend::kMultiLane;
  if (backend_supported(Backend::kClmul)) return Backend::kClmul;
  return Backend::kPortable;
}

Backend default_backend() {
  int v = g_default_backend.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(backend_select());
    g_default_backend.store(v, std::memory_order_relaxed);
  }
  return static_cast<Backend>(v);
}

void set_default_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("backend '" + std::string(backend_name(b)) +
                                "' is not supported on this machine");
  }
  g_default_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

Clmul128 clmul64(Word a, Word b, Backend backend) {
#if defined(GF2MUL_HAVE_X86_CLMUL)
  if (backend != Backend::kPortable && backend_supported(backend)) {
    Clmul128 r;
    detail::clmul64_hw(a, b, &r.lo, &r.hi);
    return r;
  }
#else
  (void)backend;
#endif
  return clmul64_portable(a, b);
}

void schoolbook_mul_into(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                         MulCounters& counters, Backend backend) {
  const std::size_t t = a.size();
  if (t == 0 || b.size() != t) {
    throw SizeError("schoolbook_mul: operands must have the same nonzero word length");
  }
  if (out.size() != 2 * t) throw SizeError("schoolbook_mul: output must hold 2t words");
  counters.base_mul_count += static_cast<std::uint64_t>(t) * t;
#if defined(GF2MUL_HAVE_X86_CLMUL)
  if (backend != Backend::kPortable && backend_supported(backend)) {
    detail::schoolbook_hw(a.data(), b.data(), t, out.data());
    return;
  }
#else
  (void)backend;
#endif
  for (Word& w : out) w = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const Clmul128 p = clmul64_portable(a[i], b[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
}

WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b, MulCounters& counters,
                           Backend backend) {
  if (a.size() != b.size()) {
    throw SizeError("schoolbook_mul: operand lengths differ (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + " words)");
  }
  WideProduct r(2 * a.size());
  schoolbook_mul_into(a.words(), b.words(), r.words(), counters, backend);
  return r;
}

WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b, MulCounters& counters) {
  return schoolbook_mul(a, b, counters, default_backend());
}

WideProduct schoolbook_mul(const PolyWords& a, const PolyWords& b) {
  MulCounters c;
  return schoolbook_mul(a, b, c, default_backend());
}

}  // namespace gf2mul
