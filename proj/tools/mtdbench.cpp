// Benchmark / verification CLI over the MTD search library.
//
//   mtdbench verify [flags]   run the invariant suite, exit 1 on violation
//   mtdbench bench  [flags]   node/pass-count comparison table (CSV)
//   mtdbench trace  [flags]   per-pass MTD trace for a single instance
//
// Flags can also come from a key=value config file (--config); command-line
// flags win. MTD_SUITE_DIR, when set, is searched for config files given by
// relative path.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mtd/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void add_suite_options(CLI::App& sub, mtd::SuiteConfig& cfg, bool& text_out) {
  sub.add_option("--game", cfg.game, "synthetic or connect4")
      ->check(CLI::IsMember({"synthetic", "connect4"}));
  sub.add_option("--branching", cfg.branching)->check(CLI::Range(1, 16));
  sub.add_option("--depth", cfg.depth)->check(CLI::Range(0, 24));
  sub.add_option("--seeds", cfg.seeds, "number of instances")
      ->check(CLI::PositiveNumber);
  sub.add_option("--ordering-quality", cfg.ordering_quality)
      ->check(CLI::Range(0.0, 1.0));
  sub.add_option("--value-span", cfg.value_span);
  sub.add_option("--parity-offset", cfg.parity_offset);
  sub.add_option("--master-seed", cfg.master_seed);
  sub.add_flag("--mixed", cfg.mixed,
               "randomize branching/depth/quality per instance");
  sub.add_option("--algorithms", cfg.algorithms,
                 "alphabeta abmem negascout negascout_tt mtd_f mtd_pinf "
                 "mtd_minf bisect")
      ->delimiter(',');
  sub.add_option("--guess", cfg.guess, "first-guess policy")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, mtd::Guess>{
              {"zero", mtd::Guess::Zero},
              {"prev", mtd::Guess::PreviousIteration},
              {"two_plies", mtd::Guess::TwoPliesAgo}},
          CLI::ignore_case));
  sub.add_option("--policy", cfg.policy.kind, "MTD pivot policy")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, mtd::Pivot>{{"mtd_f", mtd::Pivot::MtdF},
                                            {"mtd_pinf", mtd::Pivot::MtdPlusInf},
                                            {"mtd_minf", mtd::Pivot::MtdMinusInf},
                                            {"bisect", mtd::Pivot::Bisect}},
          CLI::ignore_case));
  sub.add_option("--step-bonus", cfg.policy.step_bonus);
  sub.add_option("--bonus-period", cfg.policy.bonus_period)
      ->check(CLI::PositiveNumber);
  sub.add_option("--first-guess", cfg.first_guess);
  sub.add_option("--tt-log2-slots", cfg.tt_log2_slots)->check(CLI::Range(10, 28));
  sub.add_option("--store-leaves", cfg.store_leaves)
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, bool>{{"on", true}, {"off", false}},
          CLI::ignore_case));
  sub.add_option("--node-budget", cfg.node_budget);
  sub.add_flag("--verbose-trace", cfg.verbose_trace);
  sub.add_flag("--text", text_out, "aligned text table instead of CSV (bench)");

  auto* config_opt = sub.set_config("--config", "", "key=value config file");
  config_opt->transform(CLI::Validator(
      [](std::string& path) -> std::string {
        namespace fs = std::filesystem;
        if (!fs::exists(path)) {
          if (const char* dir = std::getenv("MTD_SUITE_DIR")) {
            const fs::path alt = fs::path(dir) / path;
            if (fs::exists(alt)) path = alt.string();
          }
        }
        return {};
      },
      "SUITE_FILE"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MTD(f) search benchmark harness"};
  app.require_subcommand(1);

  mtd::SuiteConfig cfg;
  bool text_out = false;

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  CLI::App* bench = app.add_subcommand("bench", "algorithm comparison table");
  CLI::App* trace = app.add_subcommand("trace", "per-pass MTD trace");
  for (CLI::App* sub : {verify, bench, trace})
    add_suite_options(*sub, cfg, text_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      // Default to mixed instance shapes unless the caller pinned them.
      if (!verify->count("--branching") && !verify->count("--depth") &&
          !verify->count("--mixed"))
        cfg.mixed = true;
      const mtd::VerifyResult res = mtd::run_verify(cfg);
      std::cout << res.report;
      return res.exit_code;
    }
    if (bench->parsed()) {
      const mtd::BenchResult res = mtd::run_bench(cfg);
      std::cout << (text_out ? res.text : res.csv);
      if (!res.values_agree) {
        std::cerr << "error: value mismatch within a row group\n";
        return kExitViolation;
      }
      if (cfg.verbose_trace) std::cerr << mtd::run_trace(cfg);
      return kExitOk;
    }
    std::cout << mtd::run_trace(cfg);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
