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

#include "gf2mul/toomcook.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace gf2mul {
namespace {

std::size_t round_up(std::size_t v, std::size_t m) { return (v + m - 1) / m * m; }

void zero(std::span<Word> s) { std::fill(s.begin(), s.end(), Word{0}); }

void xor_at(std::span<Word> dst, std::span<const Word> src, std::size_t offset) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] ^= src[i];
}

// p := p / X^(64k).
void div_x_words(std::span<Word> p, std::size_t k, MulCounters& counters) {
  Word low = 0;
  for (std::size_t i = 0; i < k; ++i) low |= p[i];
  if (low != 0) throw ExactnessError("division by x: low chunk is not zero");
  std::copy(p.begin() + static_cast<std::ptrdiff_t>(k), p.end(), p.begin());
  zero(p.last(k));
  ++counters.exact_divisions;
}

// p := p / (X^(64k) + 1); p.size() is a multiple of k. Q_j = P_j + Q_(j-1)
// chunk by chunk, and the chunk that would carry out past the buffer must
// vanish.
void div_x_plus_1_words(std::span<Word> p, std::size_t k, MulCounters& counters) {
  for (std::size_t j = k; j < p.size(); ++j) p[j] ^= p[j - k];
  counters.xor64_count += p.size() - k;
  Word carry = 0;
  for (Word w : p.last(k)) carry |= w;
  if (carry != 0) throw ExactnessError("division by x+1: nonzero carry-out chunk");
  ++counters.exact_divisions;
}

void require_zero_from(std::span<const Word> p, std::size_t from, const char* what) {
  Word acc = 0;
  for (std::size_t i = from; i < p.size(); ++i) acc |= p[i];
  if (acc != 0) throw ExactnessError(std::string(what) + ": high guard chunk is not zero");
}

struct EvalSpans {
  std::array<std::span<Word>, 5> c;  // C(0), C(1), C(x), C(x+1), C(inf)
};

// Loads dst = p0 + p1 x + p2 x^2 (each part n words, x = k words), or with
// `sum_base` dst = (p0+p1+p2) + p1 x + p2 x^2, or just one part when the
// shift parts are skipped.
void evaluate_into(std::span<const Word> a, std::span<const Word> b, const ToomSizing& s,
                   const Multiplier& elem, const EvalSpans& out, std::span<Word> ea,
                   std::span<Word> eb, std::span<Word> rest, MulCounters& counters) {
  const std::size_t n = s.n;
  const std::size_t k = s.w_words();
  auto part = [n](std::span<const Word> p, std::size_t i) { return p.subspan(i * n, n); };

  auto load_single = [&](std::span<Word> dst, std::span<const Word> p, std::size_t i) {
    zero(dst);
    xor_at(dst, part(p, i), 0);
  };
  auto load_sum = [&](std::span<Word> dst, std::span<const Word> p) {
    zero(dst);
    for (std::size_t i = 0; i < 3; ++i) xor_at(dst, part(p, i), 0);
  };
  auto add_shifted = [&](std::span<Word> dst, std::span<const Word> p) {
    xor_at(dst, part(p, 1), k);
    xor_at(dst, part(p, 2), 2 * k);
  };

  load_single(ea, a, 0);
  load_single(eb, b, 0);
  elem.mul(ea, eb, out.c[0], rest, counters);

  load_sum(ea, a);
  load_sum(eb, b);
  elem.mul(ea, eb, out.c[1], rest, counters);

  load_single(ea, a, 0);
  load_single(eb, b, 0);
  add_shifted(ea, a);
  add_shifted(eb, b);
  elem.mul(ea, eb, out.c[2], rest, counters);

  load_sum(ea, a);
  load_sum(eb, b);
  add_shifted(ea, a);
  add_shifted(eb, b);
  elem.mul(ea, eb, out.c[3], rest, counters);

  load_single(ea, a, 2);
  load_single(eb, b, 2);
  elem.mul(ea, eb, out.c[4], rest, counters);

  counters.xor64_count += 2 * (2 * n + 2 * n + 2 * n + 4 * n);
}

// Recovers c0..c4 and writes C = sum c_i X^(64 n i) to out (6n words).
//
//   c0 = C(0)
//   c1 = C(0) + C(1) + (x^2 + x) C(inf) + [C(0) + C(x) + x (C(x) + C(x+1))] / (x^2 + x)
//   c2 = (x^2 + x + 1) C(inf) + [C(1) + C(x+1) + x (C(x) + C(x+1))] / (x^2 + x)
//   c3 = [C(0) + C(1) + C(x) + C(x+1)] / (x^2 + x)
//   c4 = C(inf)
//
// Each bracket is exactly divisible by x (x + 1); the individual terms of the
// closed forms are not, so they are grouped over the common denominator.
void interpolate_into(const std::array<std::span<const Word>, 5>& c, const ToomSizing& s,
                      std::span<Word> out, std::span<Word> u, std::span<Word> v,
                      std::span<Word> w, MulCounters& counters) {
  const std::size_t n = s.n;
  const std::size_t k = s.w_words();
  const std::size_t pw = 2 * s.elem_words;
  const auto& c0 = c[0];
  const auto& c1 = c[1];
  const auto& cx = c[2];
  const auto& cx1 = c[3];
  const auto& cinf = c[4];

  zero(u);
  zero(v);
  zero(w);
  for (std::size_t i = 0; i < pw; ++i) {
    const Word d = cx[i] ^ cx1[i];
    w[i] = c0[i] ^ c1[i] ^ d;
    u[i] ^= c0[i] ^ cx[i];
    v[i] ^= c1[i] ^ cx1[i];
    u[i + k] ^= d;
    v[i + k] ^= d;
  }
  counters.xor64_count += 9 * pw;

  for (std::span<Word> q : {w, u, v}) {
    div_x_words(q, k, counters);
    div_x_plus_1_words(q, k, counters);
  }

  // u -> c1, v -> c2, w -> c3
  for (std::size_t i = 0; i < 2 * n; ++i) {
    u[i] ^= c0[i] ^ c1[i];
    u[i + k] ^= cinf[i];
    u[i + 2 * k] ^= cinf[i];
    v[i] ^= cinf[i];
    v[i + k] ^= cinf[i];
    v[i + 2 * k] ^= cinf[i];
  }
  counters.xor64_count += 12 * n;

  require_zero_from(c0, 2 * n, "c0");
  require_zero_from(cinf, 2 * n, "c4");
  require_zero_from(u, 2 * n, "c1");
  require_zero_from(v, 2 * n, "c2");
  require_zero_from(w, 2 * n, "c3");

  zero(out);
  xor_at(out, c0.first(2 * n), 0);
  xor_at(out, u.first(2 * n), n);
  xor_at(out, v.first(2 * n), 2 * n);
  xor_at(out, w.first(2 * n), 3 * n);
  xor_at(out, cinf.first(2 * n), 4 * n);
  counters.xor64_count += 10 * n;
}

std::size_t interp_words(const ToomSizing& s) {
  return round_up(2 * s.elem_words + s.w_words(), s.w_words());
}

void check_sizing(const ToomSizing& s) {
  if (!is_toom_shift(s.w_bits)) {
    throw SizeError("Toom-3 shift must be 64, 256 or 512 bits, got " + std::to_string(s.w_bits));
  }
  if (s.n == 0 || s.t != 3 * s.n || s.elem_words != s.n + 2 * s.w_words() ||
      s.max_degree != s.t * kWordBits - 1) {
    throw SizeError("inconsistent Toom-3 sizing");
  }
}

class Toom3Mul final : public Multiplier {
 public:
  Toom3Mul(MultiplierPtr elem, ToomSizing s)
      : Multiplier(s.t), elem_(std::move(elem)), s_(s), l_(interp_words(s)) {}

  std::size_t scratch_words() const noexcept override {
    return 2 * s_.elem_words + 10 * s_.elem_words + 3 * l_ + elem_->scratch_words();
  }

  void mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
           std::span<Word> scratch, MulCounters& counters) const override {
    const std::size_t e = s_.elem_words;
    std::span<Word> ea = scratch.subspan(0, e);
    std::span<Word> eb = scratch.subspan(e, e);
    EvalSpans ev;
    for (std::size_t i = 0; i < 5; ++i) ev.c[i] = scratch.subspan(2 * e + i * 2 * e, 2 * e);
    std::span<Word> u = scratch.subspan(12 * e, l_);
    std::span<Word> v = scratch.subspan(12 * e + l_, l_);
    std::span<Word> w = scratch.subspan(12 * e + 2 * l_, l_);
    std::span<Word> rest = scratch.subspan(12 * e + 3 * l_);

    evaluate_into(a, b, s_, *elem_, ev, ea, eb, rest, counters);
    std::array<std::span<const Word>, 5> c;
    for (std::size_t i = 0; i < 5; ++i) c[i] = ev.c[i];
    interpolate_into(c, s_, out, u, v, w, counters);
  }

  std::string label() const override {
    return "Toom3(w=" + std::to_string(s_.w_bits) + ") " + std::to_string(bits());
  }

 private:
  MultiplierPtr elem_;
  ToomSizing s_;
  std::size_t l_;
};

}  // namespace

bool is_toom_shift(std::size_t w_bits) noexcept {
  return w_bits == 64 || w_bits == 256 || w_bits == 512;
}

ToomSizing toom3_sizing_for_elementary(std::size_t elem_words, std::size_t w_bits) {
  if (!is_toom_shift(w_bits)) {
    throw SizeError("Toom-3 shift must be 64, 256 or 512 bits, got " + std::to_string(w_bits));
  }
  const std::size_t k = w_bits / kWordBits;
  if (elem_words <= 2 * k) {
    throw SizeError("elementary size of " + std::to_string(elem_words) +
                    " words leaves no room for a w=" + std::to_string(w_bits) + " split");
  }
  ToomSizing s;
  s.w_bits = w_bits;
  s.elem_words = elem_words;
  s.n = elem_words - 2 * k;
  s.t = 3 * s.n;
  s.max_degree = s.t * kWordBits - 1;
  return s;
}

ToomSizing toom3_sizing(std::size_t target_degree, std::size_t w_bits,
                        std::span<const std::size_t> elementary_words) {
  const std::size_t needed = target_degree / kWordBits + 1;  // ceil((deg + 1) / 64)
  std::optional<ToomSizing> best;
  std::optional<ToomSizing> largest;
  for (std::size_t e : elementary_words) {
    if (e <= 2 * (w_bits / kWordBits)) continue;
    const ToomSizing s = toom3_sizing_for_elementary(e, w_bits);
    if (!largest || s.t > largest->t) largest = s;
    if (s.t >= needed && (!best || s.n < best->n)) best = s;
  }
  if (!is_toom_shift(w_bits)) {
    throw SizeError("Toom-3 shift must be 64, 256 or 512 bits, got " + std::to_string(w_bits));
  }
  if (!best) {
    std::string msg = "no elementary size fits a Toom-3 of degree " + std::to_string(target_degree);
    if (largest) msg += "; nearest admissible target: degree <= " + std::to_string(largest->max_degree);
    throw SizeError(msg);
  }
  return *best;
}

ToomSizing toom3_sizing(std::size_t target_degree, std::size_t w_bits,
                        const Multiplier& elementary) {
  const std::array<std::size_t, 1> sizes{elementary.words()};
  return toom3_sizing(target_degree, w_bits, sizes);
}

EvalPoints toom3_evaluate(const PolyWords& a, const PolyWords& b, const ToomSizing& s,
                          const Multiplier& elementary, MulCounters& counters) {
  check_sizing(s);
  if (a.size() != s.t || b.size() != s.t) {
    throw SizeError("toom3_evaluate: operands must have " + std::to_string(s.t) + " words");
  }
  if (elementary.words() != s.elem_words) {
    throw SizeError("toom3_evaluate: elementary multiplier has " +
                    std::to_string(elementary.words()) + " words, sizing needs " +
                    std::to_string(s.elem_words));
  }
  const std::size_t e = s.elem_words;
  EvalPoints ep{WideProduct(2 * e), WideProduct(2 * e), WideProduct(2 * e), WideProduct(2 * e),
                WideProduct(2 * e)};
  std::vector<Word> ea(e), eb(e), rest(elementary.scratch_words());
  EvalSpans ev{{ep.c0.words(), ep.c1.words(), ep.cx.words(), ep.cx1.words(), ep.cinf.words()}};
  evaluate_into(a.words(), b.words(), s, elementary, ev, ea, eb, rest, counters);
  return ep;
}

WideProduct toom3_interpolate(const EvalPoints& e, const ToomSizing& s, MulCounters& counters) {
  check_sizing(s);
  const std::size_t pw = 2 * s.elem_words;
  for (const WideProduct* p : {&e.c0, &e.c1, &e.cx, &e.cx1, &e.cinf}) {
    if (p->size() != pw) {
      throw SizeError("toom3_interpolate: evaluation products must have " + std::to_string(pw) +
                      " words");
    }
  }
  const std::size_t l = interp_words(s);
  std::vector<Word> u(l), v(l), w(l);
  WideProduct out(2 * s.t);
  interpolate_into({e.c0.words(), e.c1.words(), e.cx.words(), e.cx1.words(), e.cinf.words()}, s,
                   out.words(), u, v, w, counters);
  return out;
}

WideProduct toom3_mul(const PolyWords& a, const PolyWords& b, const ToomSizing& s,
                      const Multiplier& elementary, MulCounters& counters) {
  check_sizing(s);
  if (a.size() > s.t || b.size() > s.t) {
    throw SizeError("toom3_mul: operands exceed " + std::to_string(s.t) + " words");
  }
  const EvalPoints ep = toom3_evaluate(a.resized(s.t), b.resized(s.t), s, elementary, counters);
  return toom3_interpolate(ep, s, counters);
}

MultiplierPtr make_toom3(MultiplierPtr elementary, std::size_t w_bits) {
  const ToomSizing s = toom3_sizing_for_elementary(elementary->words(), w_bits);
  return std::make_shared<Toom3Mul>(std::move(elementary), s);
}

PolyWords inverse_series(std::size_t w_bits, std::size_t d_bits) {
  if (w_bits == 0 || d_bits < w_bits || d_bits % w_bits != 0) {
    throw SizeError("inverse_series: d must be a positive multiple of w");
  }
  PolyWords r((d_bits + kWordBits - 1) / kWordBits);
  for (std::size_t i = 0; i < d_bits / w_bits; ++i) r.set_bit(w_bits * i, true);
  return r;
}

WideProduct exact_div_x(const WideProduct& p, std::size_t w_bits, MulCounters& counters) {
  if (w_bits == 0) throw SizeError("exact_div_x: w must be positive");
  if (w_bits >= p.bit_size()) {
    if (!p.is_zero()) throw ExactnessError("division by x: low chunk is not zero");
    ++counters.exact_divisions;
    return WideProduct(p.size());
  }
  WideProduct q = p;
  if (w_bits % kWordBits == 0) {
    div_x_words(q.words(), w_bits / kWordBits, counters);
    return q;
  }
  for (std::size_t i = 0; i < w_bits; ++i) {
    if (p.bit(i)) throw ExactnessError("division by x: low chunk is not zero");
  }
  WideProduct r(p.size());
  for (std::size_t i = w_bits; i < p.bit_size(); ++i) {
    if (p.bit(i)) r.set_bit(i - w_bits, true);
  }
  ++counters.exact_divisions;
  return r;
}

WideProduct exact_div_x(const WideProduct& p, std::size_t w_bits) {
  MulCounters c;
  return exact_div_x(p, w_bits, c);
}

WideProduct exact_div_x_plus_1(const WideProduct& p, std::size_t w_bits, MulCounters& counters) {
  if (w_bits == 0) throw SizeError("exact_div_x_plus_1: w must be positive");
  if (w_bits % kWordBits == 0) {
    const std::size_t k = w_bits / kWordBits;
    std::vector<Word> buf(round_up(p.size(), k) + k, 0);
    std::copy(p.words().begin(), p.words().end(), buf.begin());
    div_x_plus_1_words(buf, k, counters);
    return WideProduct::from_span(std::span<const Word>(buf).first(p.size()));
  }
  // Bit-granular path: q_i = p_i + q_(i-w); the top w bits of Q must be zero.
  const std::size_t bits = p.bit_size();
  WideProduct q(p.size());
  for (std::size_t i = 0; i < bits; ++i) {
    const bool qi = p.bit(i) != (i >= w_bits && q.bit(i - w_bits));
    if (qi) q.set_bit(i, true);
  }
  for (std::size_t i = bits > w_bits ? bits - w_bits : 0; i < bits; ++i) {
    if (q.bit(i)) throw ExactnessError("division by x+1: nonzero carry-out chunk");
  }
  ++counters.exact_divisions;
  return q;
}

WideProduct exact_div_x_plus_1(const WideProduct& p, std::size_t w_bits) {
  MulCounters c;
  return exact_div_x_plus_1(p, w_bits, c);
}

}  // namespace gf2mul
