// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs everything single-threaded and deterministically.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "mtd/search.hpp"
#include "mtd/suite.hpp"

using namespace mtd;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << " [" << std::fixed << seconds << "s]\n";
  std::cout.unsetf(std::ios::fixed);
  if (!pass) ++g_failures;
}

template <typename F>
void criterion(int index, const std::string& name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(index, name, pass, detail, secs);
}

SuiteConfig mixed_synthetic(int seeds, std::uint64_t master_seed) {
  SuiteConfig cfg;
  cfg.seeds = seeds;
  cfg.mixed = true;
  cfg.master_seed = master_seed;
  cfg.tt_log2_slots = 16;
  return cfg;
}

SuiteConfig mixed_connect4(int seeds, std::uint64_t master_seed) {
  SuiteConfig cfg = mixed_synthetic(seeds, master_seed);
  cfg.game = "connect4";
  return cfg;
}

// 1. oracle = alphabeta_plain = alphabeta_with_memory = negascout = mtd for
//    every pivot and guess policy, synthetic and Connect-Four.
bool criterion_value_agreement(std::string& detail) {
  int checked = 0, skipped = 0;
  for (const SuiteConfig& cfg :
       {mixed_synthetic(1000, 101), mixed_connect4(100, 102)}) {
    for (const Instance& inst : make_instances(cfg)) {
      const auto oracle = instance_oracle(inst);
      if (!oracle) {
        ++skipped;
        continue;
      }
      if (const auto failure = check_value_agreement(inst, *oracle, cfg)) {
        detail = *failure;
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances, " + std::to_string(skipped) +
           " skipped by oracle guard";
  return true;
}

// 2. f = minimax value with an empty table => exactly two passes.
bool criterion_two_pass(std::string& detail) {
  int checked = 0;
  for (const SuiteConfig& cfg :
       {mixed_synthetic(150, 201), mixed_connect4(60, 202)}) {
    for (const Instance& inst : make_instances(cfg)) {
      const auto oracle = instance_oracle(inst);
      if (!oracle) continue;
      TranspositionTable tt(TTConfig{cfg.tt_log2_slots});
      SearchStats st;
      const MtdOutcome o =
          mtd::mtd(*inst.model, inst.root, *oracle, inst.depth, {}, tt, st);
      if (o.passes != 2 || o.value != *oracle) {
        detail = inst.id + " took " + std::to_string(o.passes) + " passes";
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances";
  return checked >= 200;
}

// 3. zero-window calls fail high to lower bounds and low to upper bounds.
bool criterion_zero_window(std::string& detail) {
  int samples = 0;
  Rng rng(303);
  SuiteConfig cfg = mixed_synthetic(300, 301);
  for (const Instance& inst : make_instances(cfg)) {
    const auto oracle = instance_oracle(inst);
    if (!oracle) continue;
    if (const auto failure =
            check_zero_window_law(inst, *oracle, 8, rng, cfg)) {
      detail = *failure;
      return false;
    }
    samples += 8;
  }
  detail = std::to_string(samples) + " samples";
  return samples >= 2000;
}

// 4. per-pass sandwich, monotone bounds, exactly one bound per pass.
bool criterion_mtd_bounds(std::string& detail) {
  int checked = 0;
  for (const SuiteConfig& cfg :
       {mixed_synthetic(250, 401), mixed_connect4(50, 402)}) {
    for (const Instance& inst : make_instances(cfg)) {
      const auto oracle = instance_oracle(inst);
      if (!oracle) continue;
      if (const auto failure = check_mtd_bounds(inst, *oracle, cfg)) {
        detail = *failure;
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances, 7 traced runs each";
  return checked >= 200;
}

// 5. nodes_visited never grows when the window narrows.
bool criterion_cutoff_monotonicity(std::string& detail) {
  int checked = 0;
  Rng rng(505);
  for (const SuiteConfig& cfg :
       {mixed_synthetic(150, 501), mixed_connect4(60, 502)}) {
    for (const Instance& inst : make_instances(cfg)) {
      const auto oracle = instance_oracle(inst);
      if (!oracle) continue;
      if (const auto failure =
              check_cutoff_monotonicity(inst, *oracle, rng, cfg)) {
        detail = *failure;
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances";
  return checked >= 200;
}

// 6. MTD(f) vs NegaScout, both memory-backed under iterative deepening with
//    previous-iteration guessing, on ordered synthetic trees.
bool criterion_comparative(std::string& detail) {
  SuiteConfig cfg;
  cfg.seeds = 300;
  cfg.branching = 4;
  cfg.depth = 8;
  cfg.ordering_quality = 0.9;
  cfg.master_seed = 601;
  cfg.tt_log2_slots = 18;
  cfg.guess = Guess::PreviousIteration;
  cfg.algorithms = {"negascout_tt", "mtd_f"};

  const BenchResult res = run_bench(cfg);
  if (!res.values_agree) {
    detail = "value mismatch between algorithms";
    return false;
  }
  double log_ns = 0, log_mtd = 0;
  int n = 0;
  for (const BenchRow& row : res.rows) {
    if (row.algorithm == "negascout_tt")
      log_ns += std::log(double(row.stats.leaves_evaluated));
    else
      log_mtd += std::log(double(row.stats.leaves_evaluated)), ++n;
  }
  const double ratio = std::exp((log_mtd - log_ns) / n);
  std::ostringstream os;
  os << "geomean leaves MTD(f) / NegaScout = " << std::setprecision(4) << ratio
     << " over " << n << " trees";
  detail = os.str();
  return ratio <= 1.10;
}

// 7. warm-table repeat of a completed search visits exactly one node.
bool criterion_memory_idempotence(std::string& detail) {
  int checked = 0;
  for (const SuiteConfig& cfg :
       {mixed_synthetic(80, 701), mixed_connect4(40, 702)}) {
    for (const Instance& inst : make_instances(cfg)) {
      if (const auto failure = check_memory_idempotence(inst, cfg)) {
        detail = *failure;
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances";
  return checked >= 100;
}

// 8. byte-identical CSV / trace / verify outputs across two full runs.
bool criterion_determinism(std::string& detail) {
  SuiteConfig bench_cfg = mixed_synthetic(40, 801);
  bench_cfg.algorithms = {"alphabeta", "abmem", "negascout", "negascout_tt",
                          "mtd_f", "mtd_pinf", "mtd_minf", "bisect"};
  const std::string csv1 = run_bench(bench_cfg).csv;
  const std::string csv2 = run_bench(bench_cfg).csv;

  SuiteConfig trace_cfg;
  trace_cfg.seeds = 1;
  trace_cfg.branching = 4;
  trace_cfg.depth = 6;
  trace_cfg.master_seed = 802;
  const std::string tr1 = run_trace(trace_cfg);
  const std::string tr2 = run_trace(trace_cfg);

  SuiteConfig verify_cfg = mixed_synthetic(10, 803);
  const std::string v1 = run_verify(verify_cfg).report;
  const std::string v2 = run_verify(verify_cfg).report;

  if (csv1 != csv2) detail = "bench CSV differs";
  if (tr1 != tr2) detail += " trace differs";
  if (v1 != v2) detail += " verify report differs";
  return csv1 == csv2 && tr1 == tr2 && v1 == v2;
}

}  // namespace

int main() {
  criterion(1, "value agreement across all algorithms and policies",
            criterion_value_agreement);
  criterion(2, "two-pass law for a perfect first guess", criterion_two_pass);
  criterion(3, "zero-window bound law", criterion_zero_window);
  criterion(4, "sandwich + monotone MTD bounds", criterion_mtd_bounds);
  criterion(5, "cutoff monotonicity", criterion_cutoff_monotonicity);
  criterion(6, "MTD(f) vs NegaScout comparative benchmark",
            criterion_comparative);
  criterion(7, "memory idempotence", criterion_memory_idempotence);
  criterion(8, "byte-identical outputs across runs", criterion_determinism);

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
