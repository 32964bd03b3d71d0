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


#include "gf2mul/ring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace gf2mul {
namespace {

MulPlan hqc_plan(HqcLevel level, BackendClass cls) {
  const MulPlan kernel = MulPlan::kernel(cls == BackendClass::kMultiLane
                                             ? KernelVariant::kKarat512SB
                                             : KernelVariant::kKarat512K128);
  switch (level) {
    case HqcLevel::k128:
      return MulPlan::toom3(MulPlan::karat3(MulPlan::karat_rec(kernel, 2048)), 64);
    case HqcLevel::k192:
      return MulPlan::toom3(MulPlan::karat3(MulPlan::karat_rec(kernel, 4096)), 64);
    case HqcLevel::k256:
      return MulPlan::toom3(MulPlan::karat5(MulPlan::karat_rec(kernel, 4096)),
                            cls == BackendClass::kMultiLane ? 512 : 256);
  }
  throw std::invalid_argument("unknown HQC level");
}

void require_operand(const PolyWords& p, const RingParams& params, const char* name) {
  if (p.size() != params.words()) {
    throw SizeError(std::string("ring operand ") + name + " must have " +
                    std::to_string(params.words()) + " words, got " + std::to_string(p.size()));
  }
  const std::size_t r = params.n % kWordBits;
  if (r != 0 && (p[p.size() - 1] >> r) != 0) {
    throw SizeError(std::string("ring operand ") + name + " has bits set at or above X^" +
                    std::to_string(params.n));
  }
}

}  // namespace

std::string_view level_name(HqcLevel level) {
  switch (level) {
    case HqcLevel::k128:
      return "hqc-128";
    case HqcLevel::k192:
      return "hqc-192";
    case HqcLevel::k256:
      return "hqc-256";
  }
  return "";
}

std::optional<HqcLevel> parse_level(std::string_view name) {
  if (name == "hqc-128") return HqcLevel::k128;
  if (name == "hqc-192") return HqcLevel::k192;
  if (name == "hqc-256") return HqcLevel::k256;
  return std::nullopt;
}

std::size_t level_n(HqcLevel level) {
  switch (level) {
    case HqcLevel::k128:
      return 17669;
    case HqcLevel::k192:
      return 35851;
    case HqcLevel::k256:
      return 57637;
  }
  return 0;
}

RingParams ring_params(std::size_t n, BackendClass cls) {
  if (n < 2) throw SizeError("ring degree must be at least 2");
  return RingParams{n, plan_for(n, cls)};
}

RingParams preset(HqcLevel level, BackendClass cls) {
  return RingParams{level_n(level), hqc_plan(level, cls)};
}

PolyWords fold(std::span<const Word> product, std::size_t n) {
  const std::size_t w = (n + kWordBits - 1) / kWordBits;
  const std::size_t q = n / kWordBits;
  const std::size_t r = n % kWordBits;
  auto at = [&](std::size_t i) -> Word { return i < product.size() ? product[i] : 0; };
  PolyWords out(w);
  for (std::size_t i = 0; i < w; ++i) {
    Word high = at(q + i) >> r;
    if (r != 0) high |= at(q + i + 1) << (kWordBits - r);
    out[i] = at(i) ^ high;
  }
  if (r != 0) out[w - 1] &= (Word{1} << r) - 1;
  return out;
}

RingMultiplier::RingMultiplier(RingParams params, Backend backend)
    : params_(std::move(params)), mul_(build(params_.plan, backend)) {
  if (params_.plan.bits() < params_.n) {
    throw SizeError("plan of " + std::to_string(params_.plan.bits()) + " bits cannot hold N = " +
                    std::to_string(params_.n));
  }
}

void RingMultiplier::mul_into(std::span<const Word> a, std::span<const Word> b,
                              std::span<Word> out, Workspace& ws, std::span<Word> padded_a,
                              std::span<Word> padded_b, MulCounters& counters) const {
  const std::size_t w = params_.words();
  std::copy(a.begin(), a.end(), padded_a.begin());
  std::fill(padded_a.begin() + static_cast<std::ptrdiff_t>(w), padded_a.end(), Word{0});
  std::copy(b.begin(), b.end(), padded_b.begin());
  std::fill(padded_b.begin() + static_cast<std::ptrdiff_t>(w), padded_b.end(), Word{0});
  mul_->mul(padded_a, padded_b, ws.out(), ws.scratch(), counters);
  const PolyWords folded = fold(ws.out().first(2 * w), params_.n);
  std::copy(folded.words().begin(), folded.words().end(), out.begin());
}

PolyWords RingMultiplier::mul(const PolyWords& a, const PolyWords& b, MulCounters& counters) const {
  require_operand(a, params_, "A");
  require_operand(b, params_, "B");
  Workspace ws(*mul_);
  std::vector<Word> pa(mul_->words()), pb(mul_->words());
  PolyWords out(params_.words());
  mul_into(a.words(), b.words(), out.words(), ws, pa, pb, counters);
  return out;
}

PolyWords RingMultiplier::mul(const PolyWords& a, const PolyWords& b) const {
  MulCounters c;
  return mul(a, b, c);
}

PolyWords ring_mul(const PolyWords& a, const PolyWords& b, const RingParams& p,
                   MulCounters& counters, Backend backend) {
  return RingMultiplier(p, backend).mul(a, b, counters);
}

PolyWords ring_mul(const PolyWords& a, const PolyWords& b, const RingParams& p) {
  MulCounters c;
  return ring_mul(a, b, p, c);
}

PolyWords sparse_to_dense(std::span<const std::uint32_t> support, std::size_t n) {
  if (n == 0) throw SizeError("sparse_to_dense: n must be positive");
  const std::size_t w = (n + kWordBits - 1) / kWordBits;
  PolyWords out(w);
  Word out_of_range = 0;
  for (std::uint32_t pos : support) {
    out_of_range |= static_cast<Word>(pos >= n);
    const std::size_t wi = pos / kWordBits;
    const Word bit = Word{1} << (pos % kWordBits);
    for (std::size_t j = 0; j < w; ++j) {
      const Word mask = Word{0} - static_cast<Word>(j == wi);
      out[j] |= bit & mask;
    }
  }
  if (out_of_range != 0) throw SizeError("sparse_to_dense: position outside [0, n)");
  return out;
}

std::vector<KatVector> read_kat(std::istream& in) {
  std::vector<KatVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, c, extra;
    if (!(fields >> a >> b >> c) || (fields >> extra)) {
      throw ParseError("known-answer line " + std::to_string(lineno) + ": expected 3 fields");
    }
    try {
      out.push_back({PolyWords(parse_hex(a)), PolyWords(parse_hex(b)), WideProduct(parse_hex(c))});
    } catch (const ParseError& e) {
      throw ParseError("known-answer line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_kat(std::ostream& out, std::span<const KatVector> vectors) {
  for (const KatVector& v : vectors) {
    out << to_hex(v.a) << ' ' << to_hex(v.b) << ' ' << to_hex(v.c) << '\n';
  }
}

}  // namespace gf2mul
