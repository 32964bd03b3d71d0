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


#include "gf2mul/planner.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "gf2mul/karatsuba.hpp"

namespace gf2mul {
namespace {

constexpr std::size_t kKernelBits = kKernelWords * kWordBits;

// Sizes up to this bound take the Karatsuba family only.
constexpr std::size_t kToomLow = 1343;
// Largest word-aligned Toom-3 size with measured winners; above it the
// Karatsuba family takes over again.
constexpr std::size_t kToomHigh = 122496;
// Preferred Toom-3 elementary switches from Karat3 to Karat5 here.
constexpr std::size_t kKarat5Above = 40000;

bool is_leaf(PlanKind k) { return k == PlanKind::kWord || k == PlanKind::kKernel; }

bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::string node_text(const MulPlan& p) {
  switch (p.kind()) {
    case PlanKind::kWord:
      return "word";
    case PlanKind::kKernel:
      return "kernel:" + std::string(kernel_name(*p.kernel_variant()));
    case PlanKind::kKaratRec:
      return "karatrec(" + node_text(*p.child()) + ")";
    case PlanKind::kKarat3:
      return "karat3(" + node_text(*p.child()) + ")";
    case PlanKind::kKarat5:
      return "karat5(" + node_text(*p.child()) + ")";
    case PlanKind::kToom3:
      return "toom3[w=" + std::to_string(p.w_bits()) + "](" + node_text(*p.child()) + ")";
  }
  return {};
}

std::string node_label(const MulPlan& p) {
  const std::string size = " " + std::to_string(p.bits());
  switch (p.kind()) {
    case PlanKind::kWord:
      return "Word" + size;
    case PlanKind::kKernel:
      return "Kernel" + size;
    case PlanKind::kKaratRec:
      return "KaratRec" + size;
    case PlanKind::kKarat3:
      return "Karat3" + size;
    case PlanKind::kKarat5:
      return "Karat5" + size;
    case PlanKind::kToom3:
      return "Toom3(w=" + std::to_string(p.w_bits()) + ")" + size;
  }
  return {};
}

// ---- parsing ----

struct RawNode {
  PlanKind kind = PlanKind::kWord;
  KernelVariant variant = KernelVariant::kKarat512SB;
  std::size_t w_bits = 0;
  std::unique_ptr<RawNode> child;
};

class PlanParser {
 public:
  explicit PlanParser(std::string_view s) : s_(s) {}

  MulPlan parse() {
    skip_ws();
    RawNode root = node();
    skip_ws();
    std::optional<std::size_t> bits;
    if (accept("@")) bits = number();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return resolve(root, bits ? *bits : natural_bits(root));
  }

 private:
  RawNode node() {
    skip_ws();
    RawNode n;
    if (accept("word")) {
      n.kind = PlanKind::kWord;
    } else if (accept("kernel:")) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const auto v = parse_kernel(s_.substr(start, pos_ - start));
      if (!v) fail("unknown kernel '" + std::string(s_.substr(start, pos_ - start)) + "'");
      n.kind = PlanKind::kKernel;
      n.variant = *v;
    } else if (accept("karatrec(")) {
      n.kind = PlanKind::kKaratRec;
      n.child = std::make_unique<RawNode>(node());
      expect(")");
    } else if (accept("karat3(")) {
      n.kind = PlanKind::kKarat3;
      n.child = std::make_unique<RawNode>(node());
      expect(")");
    } else if (accept("karat5(")) {
      n.kind = PlanKind::kKarat5;
      n.child = std::make_unique<RawNode>(node());
      expect(")");
    } else if (accept("toom3[w=")) {
      n.kind = PlanKind::kToom3;
      n.w_bits = number();
      expect("](");
      n.child = std::make_unique<RawNode>(node());
      expect(")");
    } else {
      fail("expected a plan node");
    }
    return n;
  }

  // Size implied by the leaves when the root carries no explicit size.
  std::size_t natural_bits(const RawNode& n) {
    switch (n.kind) {
      case PlanKind::kWord:
        return kWordBits;
      case PlanKind::kKernel:
        return kKernelBits;
      case PlanKind::kKaratRec:
        fail("karatrec needs an explicit size, e.g. karatrec(kernel:karat512_sb)@2048");
      case PlanKind::kKarat3:
        return 3 * natural_bits(*n.child);
      case PlanKind::kKarat5:
        return 5 * natural_bits(*n.child);
      case PlanKind::kToom3:
        return toom3_sizing_for_elementary(natural_bits(*n.child) / kWordBits, n.w_bits).bits();
    }
    return 0;
  }

  MulPlan resolve(const RawNode& n, std::size_t bits) {
    auto size_error = [&](const std::string& what) {
      throw SizeError("plan node " + what + " cannot have " + std::to_string(bits) + " bits");
    };
    switch (n.kind) {
      case PlanKind::kWord:
        if (bits != kWordBits) size_error("word");
        return MulPlan::word();
      case PlanKind::kKernel:
        if (bits != kKernelBits) size_error("kernel");
        return MulPlan::kernel(n.variant);
      case PlanKind::kKaratRec: {
        if (!is_leaf(n.child->kind)) fail("karatrec must wrap word or kernel");
        const std::size_t lb = n.child->kind == PlanKind::kWord ? kWordBits : kKernelBits;
        return MulPlan::karat_rec(resolve(*n.child, lb), bits);
      }
      case PlanKind::kKarat3:
        if (bits % (3 * kWordBits) != 0) size_error("karat3");
        return MulPlan::karat3(resolve(*n.child, bits / 3));
      case PlanKind::kKarat5:
        if (bits % (5 * kWordBits) != 0) size_error("karat5");
        return MulPlan::karat5(resolve(*n.child, bits / 5));
      case PlanKind::kToom3: {
        if (!is_toom_shift(n.w_bits)) {
          throw SizeError("Toom-3 shift must be 64, 256 or 512 bits, got " + std::to_string(n.w_bits));
        }
        if (bits % (3 * kWordBits) != 0) size_error("toom3");
        const std::size_t e = bits / (3 * kWordBits) + 2 * n.w_bits / kWordBits;
        return MulPlan::toom3(resolve(*n.child, e * kWordBits), n.w_bits);
      }
    }
    fail("bad node");
  }

  std::size_t number() {
    skip_ws();
    std::size_t v = 0;
    const char* b = s_.data() + pos_;
    const char* e = s_.data() + s_.size();
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p == b) fail("expected a number");
    pos_ += static_cast<std::size_t>(p - b);
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("plan '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// ---- candidate enumeration ----

struct Candidate {
  MulPlan plan;
  std::uint64_t base_muls;
  std::string text;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.plan.bits() != b.plan.bits()) return a.plan.bits() < b.plan.bits();
  if (a.base_muls != b.base_muls) return a.base_muls < b.base_muls;
  return a.text < b.text;
}

struct Families {
  std::vector<MulPlan> karatsuba;  // KaratRec and Karat3/Karat5 compositions
  std::vector<MulPlan> karat_rec;
  std::vector<MulPlan> karat3;     // Karat3(KaratRec)
  std::vector<MulPlan> karat5;     // Karat5(KaratRec)
};

Families enumerate_families(const MulPlan& kernel, std::size_t limit_bits) {
  Families f;
  for (std::size_t bits = kKernelBits; bits <= limit_bits; bits *= 2) {
    const MulPlan kr = MulPlan::karat_rec(kernel, bits);
    f.karat_rec.push_back(kr);
    f.karatsuba.push_back(kr);
    const MulPlan k3 = MulPlan::karat3(kr);
    const MulPlan k5 = MulPlan::karat5(kr);
    f.karat3.push_back(k3);
    f.karat5.push_back(k5);
    for (const MulPlan& p : {k3, k5, MulPlan::karat3(k3), MulPlan::karat5(k5), MulPlan::karat3(k5),
                             MulPlan::karat5(k3)}) {
      if (p.bits() <= limit_bits) f.karatsuba.push_back(p);
    }
  }
  return f;
}

void add_toom(std::vector<MulPlan>& out, const std::vector<MulPlan>& elementaries,
              BackendClass cls) {
  const std::size_t max_w = cls == BackendClass::kMultiLane ? 512 : 256;
  for (const MulPlan& e : elementaries) {
    for (std::size_t w : {64u, 256u, 512u}) {
      if (w > max_w || e.words() <= 2 * w / kWordBits) continue;
      out.push_back(MulPlan::toom3(e, w));
    }
  }
}

std::optional<Candidate> pick(const std::vector<MulPlan>& plans, std::size_t target_bits) {
  std::optional<Candidate> best;
  for (const MulPlan& p : plans) {
    if (p.bits() < target_bits) continue;
    Candidate c{p, estimate(p).base_muls, serialize(p)};
    if (!best || better(c, *best)) best = std::move(c);
  }
  return best;
}

}  // namespace

std::string_view backend_class_name(BackendClass c) {
  return c == BackendClass::kMultiLane ? "multi-lane" : "128-lane";
}

std::optional<BackendClass> parse_backend_class(std::string_view name) {
  if (name == "multi-lane" || name == "multilane") return BackendClass::kMultiLane;
  if (name == "128-lane" || name == "128lane") return BackendClass::k128Lane;
  return std::nullopt;
}

BackendClass backend_class_of(Backend b) {
  return b == Backend::kMultiLane ? BackendClass::kMultiLane : BackendClass::k128Lane;
}

MulPlan MulPlan::word() { return MulPlan(PlanKind::kWord, kWordBits); }

MulPlan MulPlan::kernel(KernelVariant v) {
  MulPlan p(PlanKind::kKernel, kKernelBits);
  p.variant_ = v;
  return p;
}

MulPlan MulPlan::karat_rec(const MulPlan& leaf, std::size_t bits) {
  if (!is_leaf(leaf.kind())) throw SizeError("KaratRec must recurse down to a word or kernel");
  if (bits % leaf.bits() != 0 || !is_pow2(bits / leaf.bits())) {
    throw SizeError("KaratRec over " + node_label(leaf) + " needs 2^r * " +
                    std::to_string(leaf.bits()) + " bits, got " + std::to_string(bits));
  }
  if (bits == leaf.bits()) return leaf;
  MulPlan p(PlanKind::kKaratRec, bits);
  p.child_ = std::make_shared<const MulPlan>(leaf);
  return p;
}

MulPlan MulPlan::karat3(const MulPlan& child) {
  MulPlan p(PlanKind::kKarat3, 3 * child.bits());
  p.child_ = std::make_shared<const MulPlan>(child);
  return p;
}

MulPlan MulPlan::karat5(const MulPlan& child) {
  MulPlan p(PlanKind::kKarat5, 5 * child.bits());
  p.child_ = std::make_shared<const MulPlan>(child);
  return p;
}

MulPlan MulPlan::toom3(const MulPlan& child, std::size_t w_bits) {
  const ToomSizing s = toom3_sizing_for_elementary(child.words(), w_bits);
  MulPlan p(PlanKind::kToom3, s.bits());
  p.w_bits_ = w_bits;
  p.child_ = std::make_shared<const MulPlan>(child);
  return p;
}

const MulPlan& MulPlan::leaf() const noexcept {
  const MulPlan* p = this;
  while (p->child_) p = p->child_.get();
  return *p;
}

std::optional<KernelVariant> MulPlan::kernel_variant() const noexcept {
  const MulPlan& l = leaf();
  if (l.kind_ != PlanKind::kKernel) return std::nullopt;
  return l.variant_;
}

ToomSizing MulPlan::toom_sizing() const {
  if (kind_ != PlanKind::kToom3) throw std::logic_error("toom_sizing on a non-Toom plan node");
  return toom3_sizing_for_elementary(child_->words(), w_bits_);
}

bool operator==(const MulPlan& a, const MulPlan& b) {
  if (a.kind_ != b.kind_ || a.bits_ != b.bits_ || a.w_bits_ != b.w_bits_) return false;
  if (a.kind_ == PlanKind::kKernel && a.variant_ != b.variant_) return false;
  if (!a.child_ || !b.child_) return !a.child_ && !b.child_;
  return *a.child_ == *b.child_;
}

MulPlan plan_for(std::size_t target_bits, BackendClass cls) {
  if (target_bits < 1 || target_bits > kMaxPlanBits) {
    throw SizeError("target of " + std::to_string(target_bits) + " bits is outside [1, " +
                    std::to_string(kMaxPlanBits) + "]");
  }
  const MulPlan kernel = MulPlan::kernel(cls == BackendClass::kMultiLane
                                             ? KernelVariant::kKarat512SB
                                             : KernelVariant::kKarat512K128);
  const Families f = enumerate_families(kernel, 4 * kMaxPlanBits);

  std::vector<MulPlan> region = f.karatsuba;
  if (target_bits > kToomLow && target_bits <= kToomHigh) {
    add_toom(region, target_bits <= kKarat5Above ? f.karat3 : f.karat5, cls);
  }
  std::optional<Candidate> best = pick(region, target_bits);
  if (!best || best->plan.bits() > 2 * target_bits) {
    std::vector<MulPlan> all = f.karatsuba;
    add_toom(all, f.karat_rec, cls);
    add_toom(all, f.karat3, cls);
    add_toom(all, f.karat5, cls);
    if (auto wide = pick(all, target_bits); wide && (!best || better(*wide, *best))) best = wide;
  }
  return best->plan;
}

CostEstimate estimate(const MulPlan& plan) {
  switch (plan.kind()) {
    case PlanKind::kWord:
      return {1, 8};
    case PlanKind::kKernel:
      return {expected_base_muls(*plan.kernel_variant()), 4 * kKernelWords * kKernelWords};
    default:
      break;
  }
  const CostEstimate c = estimate(*plan.child());
  std::uint64_t factor = 1;
  switch (plan.kind()) {
    case PlanKind::kKaratRec:
      for (std::size_t t = plan.bits(); t > plan.child()->bits(); t /= 2) factor *= 3;
      break;
    case PlanKind::kKarat3:
      factor = 6;
      break;
    case PlanKind::kKarat5:
      factor = 15;
      break;
    case PlanKind::kToom3:
      factor = 5;
      break;
    default:
      break;
  }
  return {factor * c.base_muls, factor * c.xor64};
}

std::string explain(const MulPlan& plan) {
  std::string chain = node_label(plan);
  for (const MulPlan* p = plan.child(); p != nullptr; p = p->child()) {
    chain += " ← " + node_label(*p);
  }
  if (plan.child() == nullptr) return chain;
  return chain + "\n" + serialize(plan) + "  base_muls=" + std::to_string(estimate(plan).base_muls);
}

std::string serialize(const MulPlan& plan) {
  return node_text(plan) + "@" + std::to_string(plan.bits());
}

MulPlan parse_plan(std::string_view text) { return PlanParser(text).parse(); }

MultiplierPtr build(const MulPlan& plan, Backend backend) {
  switch (plan.kind()) {
    case PlanKind::kWord:
      return make_word_leaf(backend);
    case PlanKind::kKernel:
      return make_kernel_leaf(*plan.kernel_variant(), backend);
    case PlanKind::kKaratRec:
      return make_karat_rec(build(*plan.child(), backend), plan.words());
    case PlanKind::kKarat3:
      return make_karat3(build(*plan.child(), backend));
    case PlanKind::kKarat5:
      return make_karat5(build(*plan.child(), backend));
    case PlanKind::kToom3:
      return make_toom3(build(*plan.child(), backend), plan.w_bits());
  }
  throw std::logic_error("unknown plan node");
}

}  // namespace gf2mul
