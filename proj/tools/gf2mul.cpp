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


// gf2mul command-line tool: mul, plan, bench, ct-check, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gf2mul/bench.hpp"
#include "gf2mul/ct_check.hpp"
#include "gf2mul/planner.hpp"
#include "gf2mul/ring.hpp"

namespace {

using namespace gf2mul;

enum Exit : int { kOk = 0, kUsage = 1, kMismatch = 2, kNoCounter = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Backend pick_backend(const std::string& name) {
  if (name == "auto") return backend_select();
  const auto b = parse_backend(name);
  if (!b) throw UsageError("unknown backend '" + name + "'");
  if (!backend_supported(*b)) throw UsageError("backend '" + name + "' is not supported here");
  return backend_select(*b);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

MulPlan plan_or_auto(const std::string& plan_text, std::size_t bits, Backend backend) {
  if (plan_text == "auto") return plan_for(bits, backend_class_of(backend));
  MulPlan p = parse_plan(plan_text);
  if (p.bits() < bits) {
    throw SizeError("plan " + serialize(p) + " holds " + std::to_string(p.bits()) +
                    " bits, operands need " + std::to_string(bits));
  }
  return p;
}

// Product truncated to 2 * max(len) words, as the operands were given.
WideProduct mul_with(const std::string& plan_text, const PolyWords& a, const PolyWords& b,
                     Backend backend) {
  const std::size_t words = std::max(a.size(), b.size());
  const MulPlan plan = plan_or_auto(plan_text, words * kWordBits, backend);
  MulCounters c;
  return multiply_padded(*build(plan, backend), a, b, c);
}

struct Options {
  std::string backend = "auto";
  // mul
  std::string a_path, b_path, out_path, plan = "auto";
  // plan / bench
  std::vector<std::size_t> sizes;
  std::vector<std::string> plans;
  std::string format = "text";
  std::string backend_class;
  std::size_t warmup = 1000, datasets = 50, batch = 1000;
  std::uint64_t seed = 1;
  bool serialize = false;
  std::string counters = "auto";
  // ct-check
  std::string level = "hqc-128";
  std::size_t weight = 75, trials = 100000;
  bool control = false;
  // verify
  std::string kat_path;
};

int run_mul(const Options& o) {
  const Backend backend = pick_backend(o.backend);
  const PolyWords a(parse_hex_lenient(slurp(o.a_path)));
  const PolyWords b(parse_hex_lenient(slurp(o.b_path)));
  write_out(o.out_path, to_hex(mul_with(o.plan, a, b, backend)) + "\n");
  return kOk;
}

int run_plan(const Options& o) {
  const Backend backend = pick_backend(o.backend);
  BackendClass cls = backend_class_of(backend);
  if (!o.backend_class.empty()) {
    const auto c = parse_backend_class(o.backend_class);
    if (!c) throw UsageError("unknown backend class '" + o.backend_class + "'");
    cls = *c;
  }
  if (o.sizes.empty()) throw UsageError("plan needs --sizes");
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string text;
  for (std::size_t s : o.sizes) {
    const MulPlan p = plan_for(s, cls);
    const CostEstimate e = estimate(p);
    if (o.format == "json") {
      rows.push_back({{"target_bits", s},
                      {"plan", serialize(p)},
                      {"padded_bits", p.bits()},
                      {"base_muls", e.base_muls},
                      {"xor64", e.xor64}});
    } else {
      text += "size " + std::to_string(s) + " (" + std::string(backend_class_name(cls)) + ")\n" +
              explain(p) + "\nestimate: base_muls=" + std::to_string(e.base_muls) +
              " xor64=" + std::to_string(e.xor64) + "\n\n";
    }
  }
  write_out(o.out_path, o.format == "json" ? rows.dump(2) + "\n" : text);
  return kOk;
}

int run_bench_cmd(const Options& o) {
  BenchConfig cfg;
  cfg.sizes = o.sizes;
  cfg.plans = o.plans;
  cfg.warmup_runs = o.warmup;
  cfg.datasets = o.datasets;
  cfg.batch_runs = o.batch;
  cfg.seed = o.seed;
  cfg.serialize = o.serialize;
  cfg.backend = pick_backend(o.backend);
  const auto mode = parse_counter_mode(o.counters);
  if (!mode) throw UsageError("unknown counter mode '" + o.counters + "'");
  cfg.counters = *mode;
  BenchReport r;
  try {
    r = run_bench(cfg);
  } catch (const CounterUnavailable& e) {
    std::cerr << "gf2mul: " << e.what() << "\n";
    return kNoCounter;
  }
  for (const std::string& w : r.meta.warnings) std::cerr << "gf2mul: warning: " << w << "\n";
  if (o.format == "json") {
    write_out(o.out_path, to_json(r));
  } else if (o.format == "csv") {
    write_out(o.out_path, to_csv(r));
  } else {
    write_out(o.out_path, to_text(r));
  }
  return kOk;
}

int run_ct_check(const Options& o) {
  CtConfig cfg;
  const auto level = parse_level(o.level);
  if (!level) throw UsageError("unknown level '" + o.level + "'");
  cfg.level = *level;
  cfg.weight = o.weight;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.control = o.control;
  cfg.backend = pick_backend(o.backend);
  const CtResult r = ct_check(cfg);
  std::cout << "level " << level_name(cfg.level) << " weight " << cfg.weight
            << (cfg.control ? " (dense control)" : "") << "\n"
            << "samples " << r.welch.n_a << " fixed, " << r.welch.n_b << " random\n"
            << "t = " << r.welch.t << " (threshold " << cfg.threshold << ")\n"
            << "verdict: " << verdict_name(r.verdict) << "\n";
  return r.verdict == Verdict::kPass ? kOk : kMismatch;
}

int run_verify(const Options& o) {
  const Backend backend = pick_backend(o.backend);
  std::ifstream in(o.kat_path);
  if (!in) throw UsageError("cannot open '" + o.kat_path + "'");
  const std::vector<KatVector> kats = read_kat(in);
  if (kats.empty()) throw UsageError("'" + o.kat_path + "' holds no vectors");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < kats.size(); ++i) {
    const KatVector& v = kats[i];
    const WideProduct got = mul_with(o.plan, v.a, v.b, backend);
    if (got.size() != v.c.size() || !(got == v.c)) {
      ++bad;
      std::cerr << "vector " << i + 1 << ": mismatch (" << v.a.bit_size() << " bits)\n";
    }
  }
  std::cout << kats.size() - bad << "/" << kats.size() << " vectors match\n";
  return bad == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense binary polynomial multiplication over F2[X]"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--backend", o.backend, "auto, portable, clmul or multilane")
      ->check(CLI::IsMember({"auto", "portable", "clmul", "multilane"}));

  auto* mul = app.add_subcommand("mul", "Multiply two hex-encoded polynomials");
  mul->add_option("a", o.a_path, "File with operand A in hex")->required();
  mul->add_option("b", o.b_path, "File with operand B in hex")->required();
  mul->add_option("-o,--out", o.out_path, "Output file (default stdout)");
  mul->add_option("--plan", o.plan, "Plan or 'auto'");

  auto* plan = app.add_subcommand("plan", "Show the plan and cost estimate for sizes");
  plan->add_option("--sizes", o.sizes, "Target sizes in bits")->required()->delimiter(',');
  plan->add_option("--class", o.backend_class, "128-lane or multi-lane");
  plan->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  plan->add_option("-o,--out", o.out_path, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Measure multiplication cost");
  bench->add_option("--sizes", o.sizes, "Sizes in bits (>= 1024)")->required()->delimiter(',');
  bench->add_option("--plan", o.plans, "'auto' or a plan; one, or one per size")->delimiter(';');
  bench->add_option("--warmup", o.warmup)->check(CLI::PositiveNumber);
  bench->add_option("--datasets", o.datasets)->check(CLI::PositiveNumber);
  bench->add_option("--batch", o.batch)->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed);
  bench->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
  bench->add_option("--counters", o.counters, "auto, cycles, instructions or both")
      ->check(CLI::IsMember({"auto", "cycles", "instructions", "both"}));
  bench->add_flag("--serialize", o.serialize, "Fence the cycle counter reads");
  bench->add_option("-o,--out", o.out_path, "Output file (default stdout)");

  auto* ct = app.add_subcommand("ct-check", "Timing-leakage check of ring multiplication");
  ct->add_option("--level", o.level)->check(CLI::IsMember({"hqc-128", "hqc-192", "hqc-256"}));
  ct->add_option("--weight", o.weight)->check(CLI::PositiveNumber);
  ct->add_option("--trials", o.trials);
  ct->add_option("--seed", o.seed);
  ct->add_flag("--control", o.control, "Dense against dense");

  auto* verify = app.add_subcommand("verify", "Check a known-answer vector file");
  verify->add_option("file", o.kat_path, "Lines of 'A B C' in hex")->required();
  verify->add_option("--plan", o.plan, "Plan or 'auto'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mul) return run_mul(o);
    if (*plan) return run_plan(o);
    if (*bench) return run_bench_cmd(o);
    if (*ct) return run_ct_check(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "gf2mul: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "gf2mul: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    std::cerr << "gf2mul: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gf2mul: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
