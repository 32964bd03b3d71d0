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


#include "gf2mul/ct_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gf2mul/bench.hpp"

namespace gf2mul {
namespace {

constexpr std::size_t kBatch = 1000;

struct Moments {
  double mean = 0;
  double var = 0;  // sample variance
};

Moments moments(std::span<const double> x) {
  Moments m;
  if (x.empty()) return m;
  // Welford
  double mean = 0, m2 = 0;
  std::size_t n = 0;
  for (double v : x) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  m.mean = mean;
  m.var = n > 1 ? m2 / static_cast<double>(n - 1) : 0;
  return m;
}

std::vector<Word> random_dense(std::mt19937_64& rng, std::size_t n) {
  const std::size_t words = (n + kWordBits - 1) / kWordBits;
  std::vector<Word> v(words);
  for (Word& w : v) w = rng();
  if (const std::size_t r = n % kWordBits; r != 0) v.back() &= (Word{1} << r) - 1;
  return v;
}

std::vector<Word> random_sparse(std::mt19937_64& rng, std::size_t n, std::size_t weight) {
  std::uniform_int_distribution<std::uint32_t> pos(0, static_cast<std::uint32_t>(n - 1));
  std::vector<std::uint32_t> support;
  while (support.size() < weight) {
    const std::uint32_t p = pos(rng);
    if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
  }
  return sparse_to_dense(support, n).vec();
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "";
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  WelchResult r;
  r.n_a = a.size();
  r.n_b = b.size();
  const Moments ma = moments(a);
  const Moments mb = moments(b);
  r.mean_a = ma.mean;
  r.mean_b = mb.mean;
  if (a.size() < 2 || b.size() < 2) return r;
  const double se2 = ma.var / static_cast<double>(a.size()) + mb.var / static_cast<double>(b.size());
  if (!(ma.var > 0) || !(mb.var > 0) || !(se2 > 0)) return r;
  r.t = (ma.mean - mb.mean) / std::sqrt(se2);
  r.defined = true;
  return r;
}

void crop_above_quantile(std::vector<double>& a, std::vector<double>& b, double q) {
  std::vector<double> all(a);
  all.insert(all.end(), b.begin(), b.end());
  if (all.empty() || q >= 1) return;
  // nearest rank: the ceil(q N)-th smallest value
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(all.size())));
  const std::size_t k = std::clamp<std::size_t>(rank, 1, all.size()) - 1;
  std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
  const double cut = all[k];
  std::erase_if(a, [cut](double v) { return v > cut; });
  std::erase_if(b, [cut](double v) { return v > cut; });
}

CtResult ct_check_target(const CtTarget& f, std::size_t n, const CtConfig& cfg) {
  if (cfg.trials < kMinCtTrials) {
    throw std::invalid_argument("ct_check needs at least " + std::to_string(kMinCtTrials) +
                                " trials");
  }
  if (!cfg.control && (cfg.weight == 0 || cfg.weight > n)) {
    throw std::invalid_argument("weight must be in [1, n]");
  }
  const std::size_t words = (n + kWordBits - 1) / kWordBits;
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution coin(0.5);

  std::vector<double> fixed, random;
  fixed.reserve(cfg.trials / 2 + kBatch);
  random.reserve(cfg.trials / 2 + kBatch);
  std::vector<std::vector<Word>> as(kBatch), bs(kBatch);
  std::vector<char> cls(kBatch);
  std::vector<Word> out(words);

  for (std::size_t done = 0; done < cfg.trials;) {
    const std::size_t count = std::min(kBatch, cfg.trials - done);
    for (std::size_t i = 0; i < count; ++i) {
      cls[i] = coin(rng) ? 1 : 0;
      as[i] = cls[i] && !cfg.control ? random_sparse(rng, n, cfg.weight) : random_dense(rng, n);
      bs[i] = random_dense(rng, n);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t t0 = read_cycles(true);
      f(as[i], bs[i], out);
      const std::uint64_t t1 = read_cycles(true);
      (cls[i] ? fixed : random).push_back(static_cast<double>(t1 - t0));
    }
    done += count;
  }

  crop_above_quantile(fixed, random, cfg.crop_quantile);
  CtResult r;
  r.welch = welch_t(fixed, random);
  if (!r.welch.defined || r.welch.n_a < kMinCtClassSamples || r.welch.n_b < kMinCtClassSamples) {
    r.verdict = Verdict::kInconclusive;
  } else {
    r.verdict = std::fabs(r.welch.t) < cfg.threshold ? Verdict::kPass : Verdict::kFail;
  }
  return r;
}

CtResult ct_check(const CtConfig& cfg) {
  const RingMultiplier ring(preset(cfg.level, backend_class_of(cfg.backend)), cfg.backend);
  Workspace ws(ring.multiplier());
  std::vector<Word> pa(ring.multiplier().words()), pb(ring.multiplier().words());
  MulCounters sink;
  const CtTarget f = [&](std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    ring.mul_into(a, b, out, ws, pa, pb, sink);
  };
  return ct_check_target(f, ring.params().n, cfg);
}

void leaky_sparse_ring_mul(std::span<const Word> a, std::span<const Word> b, std::span<Word> out,
                           std::size_t n, Backend backend) {
  const std::size_t words = (n + kWordBits - 1) / kWordBits;
  std::vector<Word> prod(2 * words, 0);
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] == 0) continue;  // the leak
    for (std::size_t j = 0; j < words; ++j) {
      const Clmul128 p = clmul64(a[i], b[j], backend);
      prod[i + j] ^= p.lo;
      prod[i + j + 1] ^= p.hi;
    }
  }
  const PolyWords r = fold(prod, n);
  std::copy(r.words().begin(), r.words().end(), out.begin());
}

}  // namespace gf2mul
