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


#include "gf2mul/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include "json.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <x86intrin.h>
#define GF2MUL_HAVE_RDTSC 1
#endif

#if defined(__linux__)
#include <linux/perf_event.h>
#include <sys/syscall.h>
#include <unistd.h>
#endif

#include "gf2mul/ring.hpp"

namespace gf2mul {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "gf2mul-bench/1";

// Retired user-space instructions of this thread.
class InstructionCounter {
 public:
  InstructionCounter() {
#if defined(__linux__)
    perf_event_attr attr{};
    attr.type = PERF_TYPE_HARDWARE;
    attr.size = sizeof(attr);
    attr.config = PERF_COUNT_HW_INSTRUCTIONS;
    attr.exclude_kernel = 1;
    attr.exclude_hv = 1;
    fd_ = static_cast<int>(syscall(SYS_perf_event_open, &attr, 0, -1, -1, 0));
    if (fd_ >= 0 && !read_value()) {
      close(fd_);
      fd_ = -1;
    }
#endif
  }
  ~InstructionCounter() {
#if defined(__linux__)
    if (fd_ >= 0) close(fd_);
#endif
  }
  InstructionCounter(const InstructionCounter&) = delete;
  InstructionCounter& operator=(const InstructionCounter&) = delete;

  bool ok() const noexcept { return fd_ >= 0; }

  std::optional<std::uint64_t> read_value() const noexcept {
#if defined(__linux__)
    std::uint64_t v = 0;
    if (fd_ >= 0 && ::read(fd_, &v, sizeof(v)) == static_cast<ssize_t>(sizeof(v))) return v;
#endif
    return std::nullopt;
  }

 private:
  int fd_ = -1;
};

std::string read_first_line(const char* path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return {};
  return line;
}

std::string cpu_model() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        const auto start = line.find_first_not_of(' ', colon + 1);
        return start == std::string::npos ? std::string() : line.substr(start);
      }
    }
  }
  return "unknown";
}

std::string turbo_state() {
  const std::string no_turbo = read_first_line("/sys/devices/system/cpu/intel_pstate/no_turbo");
  if (no_turbo == "1") return "disabled";
  if (no_turbo == "0") return "enabled";
  const std::string boost = read_first_line("/sys/devices/system/cpu/cpufreq/boost");
  if (boost == "1") return "enabled";
  if (boost == "0") return "disabled";
  return "unknown";
}

std::string preset_tag(std::size_t plan_bits) {
  for (HqcLevel l : {HqcLevel::k128, HqcLevel::k192, HqcLevel::k256}) {
    for (BackendClass c : {BackendClass::kMultiLane, BackendClass::k128Lane}) {
      if (preset(l, c).plan.bits() == plan_bits) return std::string(level_name(l));
    }
  }
  return {};
}

void validate(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("no sizes to benchmark");
  if (cfg.warmup_runs < 1 || cfg.datasets < 1 || cfg.batch_runs < 1) {
    throw std::invalid_argument("warmup, datasets and batch must all be at least 1");
  }
  for (std::size_t s : cfg.sizes) {
    if (s < kMinBenchBits) {
      throw std::invalid_argument("size " + std::to_string(s) + " is below " +
                                  std::to_string(kMinBenchBits) +
                                  " bits; timings that small are not reliable");
    }
  }
  if (cfg.plans.size() > 1 && cfg.plans.size() != cfg.sizes.size()) {
    throw std::invalid_argument("give one plan for all sizes or one plan per size");
  }
}

MulPlan resolve_plan(const BenchConfig& cfg, std::size_t i) {
  const std::size_t size = cfg.sizes[i];
  const std::string plan_text = cfg.plans.empty()        ? "auto"
                           : cfg.plans.size() == 1 ? cfg.plans[0]
                                                   : cfg.plans[i];
  if (plan_text == "auto") return plan_for(size, backend_class_of(cfg.backend));
  MulPlan p = parse_plan(plan_text);
  if (p.bits() < size) {
    throw SizeError("plan " + serialize(p) + " is too small for " + std::to_string(size) + " bits");
  }
  return p;
}

Json row_json(const BenchRow& r) {
  Json j;
  j["size_bits"] = r.size_bits;
  j["preset"] = r.preset;
  j["plan"] = r.plan;
  j["base_mul_count"] = r.base_mul_count;
  j["cycles"] = r.cycles;
  j["cycle_minima"] = r.cycle_minima;
  j["instructions"] = r.instructions ? Json(*r.instructions) : Json(nullptr);
  j["instruction_minima"] = r.instruction_minima;
  return j;
}

Json meta_json(const BenchMeta& m) {
  Json j;
  j["cpu_model"] = m.cpu_model;
  j["governor"] = m.governor;
  j["turbo"] = m.turbo;
  j["backend"] = m.backend;
  j["cycle_source"] = m.cycle_source;
  j["wall_clock"] = m.wall_clock;
  j["serialized"] = m.serialized;
  j["instructions_available"] = m.instructions_available;
  j["seed"] = m.seed;
  j["warmup_runs"] = m.warmup_runs;
  j["datasets"] = m.datasets;
  j["batch_runs"] = m.batch_runs;
  j["warnings"] = m.warnings;
  return j;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt::format("{:.1f}", *v) : std::string("n/a");
}

}  // namespace

std::optional<CounterMode> parse_counter_mode(std::string_view s) {
  if (s == "auto") return CounterMode::kAuto;
  if (s == "cycles") return CounterMode::kCycles;
  if (s == "instructions") return CounterMode::kInstructions;
  if (s == "both") return CounterMode::kBoth;
  return std::nullopt;
}

double mean(std::span<const std::uint64_t> values) {
  if (values.empty()) return 0;
  long double sum = 0;
  for (std::uint64_t v : values) sum += static_cast<long double>(v);
  return static_cast<double>(sum / static_cast<long double>(values.size()));
}

double mean_of_minima(std::span<const std::vector<std::uint64_t>> samples) {
  std::vector<std::uint64_t> minima;
  minima.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.empty()) throw std::invalid_argument("mean_of_minima: empty dataset");
    minima.push_back(*std::min_element(s.begin(), s.end()));
  }
  return mean(minima);
}

bool cycle_counter_available() noexcept {
#if defined(GF2MUL_HAVE_RDTSC)
  return true;
#else
  return false;
#endif
}

std::uint64_t read_cycles(bool serialize) noexcept {
#if defined(GF2MUL_HAVE_RDTSC)
  if (serialize) {
    _mm_lfence();
    const std::uint64_t t = __rdtsc();
    _mm_lfence();
    return t;
  }
  return __rdtsc();
#else
  (void)serialize;
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now().time_since_epoch())
                                        .count());
#endif
}

std::pair<PolyWords, PolyWords> bench_operands(std::uint64_t seed, std::size_t bits,
                                               std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(bits), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t words = (bits + kWordBits - 1) / kWordBits;
  PolyWords a(words), b(words);
  for (std::size_t i = 0; i < words; ++i) {
    a[i] = rng();
    b[i] = rng();
  }
  if (const std::size_t r = bits % kWordBits; r != 0) {
    a[words - 1] &= (Word{1} << r) - 1;
    b[words - 1] &= (Word{1} << r) - 1;
  }
  return {std::move(a), std::move(b)};
}

BenchMeta collect_metadata(const BenchConfig& cfg) {
  BenchMeta m;
  m.cpu_model = cpu_model();
  m.governor = read_first_line("/sys/devices/system/cpu/cpu0/cpufreq/scaling_governor");
  if (m.governor.empty()) m.governor = "unknown";
  m.turbo = turbo_state();
  m.backend = std::string(backend_name(cfg.backend));
  m.wall_clock = !cycle_counter_available();
  m.cycle_source = m.wall_clock ? "steady_clock_ns" : "rdtsc";
  m.serialized = cfg.serialize;
  m.seed = cfg.seed;
  m.warmup_runs = cfg.warmup_runs;
  m.datasets = cfg.datasets;
  m.batch_runs = cfg.batch_runs;
  if (m.governor != "performance") {
    m.warnings.push_back("cpu frequency governor is '" + m.governor + "', not 'performance'");
  }
  if (m.turbo != "disabled") {
    m.warnings.push_back("turbo boost is " + m.turbo + "; cycle counts may drift");
  }
  if (m.wall_clock) m.warnings.push_back("no cycle counter; figures are nanoseconds");
  return m;
}

BenchReport run_bench(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<MulPlan> plans;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) plans.push_back(resolve_plan(cfg, i));

  BenchReport report;
  report.meta = collect_metadata(cfg);

  InstructionCounter ic;
  const bool want_ins = cfg.counters != CounterMode::kCycles;
  const bool need_ins = cfg.counters == CounterMode::kInstructions || cfg.counters == CounterMode::kBoth;
  if (need_ins && !ic.ok()) {
    throw CounterUnavailable("retired-instruction counter is not available on this system");
  }
  report.meta.instructions_available = ic.ok();
  if (want_ins && !ic.ok()) {
    report.meta.warnings.push_back("retired-instruction counter unavailable; instructions not reported");
  }
  const bool measure_cycles = cfg.counters != CounterMode::kInstructions;
  const bool measure_ins = want_ins && ic.ok();

  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    const MulPlan& plan = plans[i];
    const MultiplierPtr m = build(plan, cfg.backend);
    Workspace ws(*m);
    PolyWords a(m->words()), b(m->words());
    auto load = [&](std::size_t d) {
      auto [x, y] = bench_operands(cfg.seed, cfg.sizes[i], d);
      a = x.resized(m->words());
      b = y.resized(m->words());
    };

    BenchRow row;
    row.size_bits = cfg.sizes[i];
    row.plan = serialize(plan);
    row.preset = preset_tag(plan.bits());
    {
      MulCounters one;
      m->mul(a.words(), b.words(), ws.out(), ws.scratch(), one);
      row.base_mul_count = one.base_mul_count;
    }

    MulCounters sink;
    load(0);
    for (std::size_t r = 0; r < cfg.warmup_runs; ++r) {
      m->mul(a.words(), b.words(), ws.out(), ws.scratch(), sink);
    }
    for (std::size_t d = 0; d < cfg.datasets; ++d) {
      load(d);
      if (measure_cycles) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t r = 0; r < cfg.batch_runs; ++r) {
          const std::uint64_t t0 = read_cycles(cfg.serialize);
          m->mul(a.words(), b.words(), ws.out(), ws.scratch(), sink);
          const std::uint64_t t1 = read_cycles(cfg.serialize);
          best = std::min(best, t1 - t0);
        }
        row.cycle_minima.push_back(best);
      }
      if (measure_ins) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t r = 0; r < cfg.batch_runs; ++r) {
          const auto i0 = ic.read_value();
          m->mul(a.words(), b.words(), ws.out(), ws.scratch(), sink);
          const auto i1 = ic.read_value();
          if (i0 && i1) best = std::min(best, *i1 - *i0);
        }
        row.instruction_minima.push_back(best);
      }
    }
    row.cycles = mean(row.cycle_minima);
    if (measure_ins) row.instructions = mean(row.instruction_minima);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_json(const BenchReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["meta"] = meta_json(r.meta);
  Json rows = Json::array();
  for (const BenchRow& row : r.rows) rows.push_back(row_json(row));
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

BenchReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bench report: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kSchema) {
      throw ParseError("bench report: unknown schema '" + j.at("schema").get<std::string>() + "'");
    }
    BenchReport r;
    const Json& m = j.at("meta");
    r.meta.cpu_model = m.at("cpu_model").get<std::string>();
    r.meta.governor = m.at("governor").get<std::string>();
    r.meta.turbo = m.at("turbo").get<std::string>();
    r.meta.backend = m.at("backend").get<std::string>();
    r.meta.cycle_source = m.at("cycle_source").get<std::string>();
    r.meta.wall_clock = m.at("wall_clock").get<bool>();
    r.meta.serialized = m.at("serialized").get<bool>();
    r.meta.instructions_available = m.at("instructions_available").get<bool>();
    r.meta.seed = m.at("seed").get<std::uint64_t>();
    r.meta.warmup_runs = m.at("warmup_runs").get<std::size_t>();
    r.meta.datasets = m.at("datasets").get<std::size_t>();
    r.meta.batch_runs = m.at("batch_runs").get<std::size_t>();
    r.meta.warnings = m.at("warnings").get<std::vector<std::string>>();
    for (const Json& jr : j.at("rows")) {
      BenchRow row;
      row.size_bits = jr.at("size_bits").get<std::size_t>();
      row.preset = jr.at("preset").get<std::string>();
      row.plan = jr.at("plan").get<std::string>();
      row.base_mul_count = jr.at("base_mul_count").get<std::uint64_t>();
      row.cycles = jr.at("cycles").get<double>();
      row.cycle_minima = jr.at("cycle_minima").get<std::vector<std::uint64_t>>();
      if (!jr.at("instructions").is_null()) row.instructions = jr.at("instructions").get<double>();
      row.instruction_minima = jr.at("instruction_minima").get<std::vector<std::uint64_t>>();
      r.rows.push_back(std::move(row));
    }
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bench report: ") + e.what());
  }
}

std::string to_text(const BenchReport& r) {
  std::string out;
  out += fmt::format("# cpu: {}\n# governor: {}  turbo: {}  backend: {}  timer: {}{}\n",
                     r.meta.cpu_model, r.meta.governor, r.meta.turbo, r.meta.backend,
                     r.meta.cycle_source, r.meta.serialized ? " (serialized)" : "");
  out += fmt::format("# warmup {}  datasets {}  batch {}  seed {}\n", r.meta.warmup_runs,
                     r.meta.datasets, r.meta.batch_runs, r.meta.seed);
  for (const std::string& w : r.meta.warnings) out += "# warning: " + w + "\n";
  const char* unit = r.meta.wall_clock ? "ns" : "cycles";
  out += fmt::format("{:>8}  {:<8}  {:>14}  {:>14}  {:>10}  {}\n", "size", "preset", unit,
                     "instructions", "base_muls", "plan");
  for (const BenchRow& row : r.rows) {
    out += fmt::format("{:>8}  {:<8}  {:>14.1f}  {:>14}  {:>10}  {}\n", row.size_bits,
                       row.preset.empty() ? "-" : row.preset, row.cycles,
                       fmt_opt(row.instructions), row.base_mul_count, row.plan);
  }
  return out;
}

std::string to_csv(const BenchReport& r) {
  std::string out = "size_bits,preset,cycles,instructions,base_mul_count,plan\n";
  for (const BenchRow& row : r.rows) {
    out += fmt::format("{},{},{:.1f},{},{},\"{}\"\n", row.size_bits, row.preset, row.cycles,
                       row.instructions ? fmt::format("{:.1f}", *row.instructions) : "",
                       row.base_mul_count, row.plan);
  }
  return out;
}

}  // namespace gf2mul
