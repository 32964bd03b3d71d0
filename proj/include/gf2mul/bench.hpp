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


// Benchmark harness.
//
// Per (size, plan): `warmup` untimed runs, then for each of `datasets` random
// operand pairs `batch` timed runs keeping the minimum. The reported figure
// is the mean of the per-dataset minima; the minima are kept for audit.
// Cycles come from the time-stamp counter (unserialized unless asked) and
// retired instructions from the kernel's performance counters when allowed.

#ifndef GF2MUL_BENCH_HPP_
#define GF2MUL_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gf2mul/planner.hpp"

namespace gf2mul {

enum class CounterMode {
  kAuto,          // cycles, plus instructions when the platform allows
  kCycles,
  kInstructions,  // required: fails if unavailable
  kBoth,          // required: fails if instructions are unavailable
};

std::optional<CounterMode> parse_counter_mode(std::string_view s);

// Smallest size accepted in reports.
inline constexpr std::size_t kMinBenchBits = 1024;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  // Empty, or one entry for all sizes, or one per size. "auto" asks the
  // planner; anything else is parsed as a plan and must hold the size.
  std::vector<std::string> plans;
  std::size_t warmup_runs = 1000;
  std::size_t datasets = 50;
  std::size_t batch_runs = 1000;
  CounterMode counters = CounterMode::kAuto;
  std::uint64_t seed = 1;
  Backend backend = default_backend();
  bool serialize = false;  // fence the cycle counter reads
};

class CounterUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::size_t size_bits = 0;
  std::string preset;  // "hqc-128" etc. when the plan size is a preset size
  std::string plan;
  std::uint64_t base_mul_count = 0;  // per multiplication
  double cycles = 0;                 // mean of per-dataset minima
  std::vector<std::uint64_t> cycle_minima;
  std::optional<double> instructions;
  std::vector<std::uint64_t> instruction_minima;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchMeta {
  std::string cpu_model;
  std::string governor;  // "unknown" if unreadable
  std::string turbo;     // "enabled", "disabled" or "unknown"
  std::string backend;
  std::string cycle_source;  // "rdtsc" or "steady_clock_ns"
  bool wall_clock = false;   // true when no cycle counter was available
  bool serialized = false;
  bool instructions_available = false;
  std::uint64_t seed = 0;
  std::size_t warmup_runs = 0;
  std::size_t datasets = 0;
  std::size_t batch_runs = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const BenchMeta&, const BenchMeta&) = default;
};

struct BenchReport {
  BenchMeta meta;
  std::vector<BenchRow> rows;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Mean over datasets of the minimum over each dataset's samples.
double mean_of_minima(std::span<const std::vector<std::uint64_t>> samples);
double mean(std::span<const std::uint64_t> values);

// Operand pair `index` for a size, derived only from (seed, size, index).
std::pair<PolyWords, PolyWords> bench_operands(std::uint64_t seed, std::size_t bits,
                                               std::size_t index);

// Throws std::invalid_argument on a bad configuration, SizeError/ParseError
// on bad plans, CounterUnavailable when a required counter is missing.
BenchReport run_bench(const BenchConfig& cfg);

BenchMeta collect_metadata(const BenchConfig& cfg);

std::string to_json(const BenchReport& r);
BenchReport report_from_json(std::string_view json);
std::string to_text(const BenchReport& r);
std::string to_csv(const BenchReport& r);

// Low-level counters, exposed for the timing-leakage check.
std::uint64_t read_cycles(bool serialize) noexcept;
bool cycle_counter_available() noexcept;

}  // namespace gf2mul

#endif  // GF2MUL_BENCH_HPP_
