#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtd/game.hpp"
#include "mtd/mtd.hpp"
#include "mtd/oracle.hpp"

namespace mtd {

// One knob set for verify/bench/trace runs. The CLI maps flags and key=value
// config files straight onto this.
struct SuiteConfig {
  std::string game = "synthetic";  // synthetic | connect4
  int branching = 4;
  int depth = 6;
  int seeds = 20;  // instance count
  double ordering_quality = 0.9;
  int value_span = 100;
  int parity_offset = 0;
  std::uint64_t master_seed = 1;
  // Randomize branching (2-5), depth (2-8) and ordering quality per instance
  // instead of using the fixed values above.
  bool mixed = false;

  std::vector<std::string> algorithms = {"alphabeta", "abmem", "negascout",
                                         "mtd_f"};
  Guess guess = Guess::PreviousIteration;
  PivotPolicy policy;
  Value first_guess = 0;  // trace seed
  int tt_log2_slots = 16;
  bool store_leaves = true;
  std::uint64_t node_budget = 0;
  bool verbose_trace = false;
};

struct Instance {
  std::shared_ptr<const GameModel> model;
  Position root;
  int depth;
  std::string id;
  std::string replay;  // replayable description of this instance
};

std::vector<Instance> make_instances(const SuiteConfig& cfg);

// --- invariant checks; nullopt = pass, otherwise a failure description ---

// Brute-force value of the instance; nullopt when the enumeration guard
// refuses (the instance is then skipped by verification).
std::optional<Value> instance_oracle(const Instance& inst);

// oracle = alphabeta_plain = alphabeta_with_memory = negascout = mtd for
// every pivot policy and guess policy.
std::optional<std::string> check_value_agreement(const Instance& inst,
                                                 Value oracle,
                                                 const SuiteConfig& cfg);

// Fail high => lower bound, fail low => upper bound, for random pivots.
std::optional<std::string> check_zero_window_law(const Instance& inst,
                                                 Value oracle, int samples,
                                                 Rng& rng,
                                                 const SuiteConfig& cfg);

// Per-pass sandwich (lower <= oracle <= upper), bound monotonicity, exactly
// one bound moving per pass, and the two-pass law for f = oracle value.
std::optional<std::string> check_mtd_bounds(const Instance& inst, Value oracle,
                                            const SuiteConfig& cfg);

// Warm-table repeat of a completed search visits exactly one node.
std::optional<std::string> check_memory_idempotence(const Instance& inst,
                                                    const SuiteConfig& cfg);

// nodes_visited never grows when the window shrinks (empty table).
std::optional<std::string> check_cutoff_monotonicity(const Instance& inst,
                                                     Value oracle, Rng& rng,
                                                     const SuiteConfig& cfg);

// --- CLI-facing runners ---

struct VerifyResult {
  bool ok = true;
  int exit_code = 0;
  std::string report;
};
VerifyResult run_verify(const SuiteConfig& cfg);

struct BenchRow {
  std::string instance;
  std::string algorithm;
  int depth = 0;
  Value value = 0;
  SearchStats stats;
};

struct BenchResult {
  bool values_agree = true;
  std::vector<BenchRow> rows;
  std::string csv;
  std::string text;
};
BenchResult run_bench(const SuiteConfig& cfg);

// Runs one algorithm id ("alphabeta", "abmem", "negascout", "negascout_tt",
// "mtd_f", "mtd_pinf", "mtd_minf", "bisect") on one instance.
BenchRow run_algorithm(const Instance& inst, const std::string& algorithm,
                       const SuiteConfig& cfg);

std::string run_trace(const SuiteConfig& cfg);

std::string format_trace(const MtdOutcome& outcome);

}  // namespace mtd
