#include "mtd/suite.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mtd/connect4.hpp"
#include "mtd/search.hpp"
#include "mtd/synthetic.hpp"

namespace mtd {
namespace {

std::string fmt_val(Value v) {
  if (v >= kInf) return "+inf";
  if (v <= -kInf) return "-inf";
  return std::to_string(v);
}

Pivot pivot_of(const std::string& algorithm) {
  if (algorithm == "mtd_f") return Pivot::MtdF;
  if (algorithm == "mtd_pinf") return Pivot::MtdPlusInf;
  if (algorithm == "mtd_minf") return Pivot::MtdMinusInf;
  if (algorithm == "bisect") return Pivot::Bisect;
  throw std::invalid_argument("unknown MTD variant: " + algorithm);
}

TTConfig tt_config(const SuiteConfig& cfg) {
  TTConfig t;
  t.log2_slots = cfg.tt_log2_slots;
  return t;
}

SearchOptions search_options(const SuiteConfig& cfg) {
  SearchOptions o;
  o.store_leaves = cfg.store_leaves;
  o.node_budget = cfg.node_budget;
  return o;
}

std::vector<Instance> synthetic_instances(const SuiteConfig& cfg) {
  static constexpr double kQualities[] = {0.5, 0.75, 0.9, 1.0};
  std::vector<Instance> out;
  out.reserve(cfg.seeds);
  for (int i = 0; i < cfg.seeds; ++i) {
    Rng rng(mix64(cfg.master_seed ^ (0x5eedULL + std::uint64_t(i) * 0x9e3779b9ULL)));
    SyntheticTreeSpec spec;
    spec.seed = rng.next();
    spec.value_span = cfg.value_span;
    spec.parity_offset = cfg.parity_offset;
    if (cfg.mixed) {
      spec.branching = rng.range(2, 5);
      spec.depth = rng.range(2, 8);
      spec.ordering_quality = kQualities[rng.below(4)];
    } else {
      spec.branching = cfg.branching;
      spec.depth = cfg.depth;
      spec.ordering_quality = cfg.ordering_quality;
    }
    Instance inst;
    inst.model = std::make_shared<SyntheticModel>(spec);
    inst.root = inst.model->root();
    inst.depth = spec.depth;
    inst.id = "syn" + std::to_string(i);
    inst.replay = "game=synthetic\n" + spec.to_config() +
                  "search_depth=" + std::to_string(inst.depth) + "\n";
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> connect4_instances(const SuiteConfig& cfg) {
  auto model = std::make_shared<Connect4Model>();
  std::vector<Instance> out;
  out.reserve(cfg.seeds);
  for (int i = 0; i < cfg.seeds; ++i) {
    Rng rng(mix64(cfg.master_seed ^ (0xC4ULL + std::uint64_t(i) * 0x9e3779b9ULL)));
    const int target = int(rng.below(11));  // 0..10 prefix moves
    Position pos = model->root();
    std::string moves;
    for (int m = 0; m < target; ++m) {
      std::vector<int> legal;
      for (int col = 0; col < Connect4Model::kWidth; ++col)
        if (!model->column_full(pos, col)) legal.push_back(col);
      const int col = legal[rng.below(legal.size())];
      const Position next = model->apply(pos, col);
      if (model->is_terminal(next)) break;
      pos = next;
      if (!moves.empty()) moves += ',';
      moves += std::to_string(col);
    }
    Instance inst;
    inst.model = model;
    inst.root = pos;
    inst.depth = cfg.mixed ? rng.range(1, 8) : cfg.depth;
    inst.id = "c4_" + std::to_string(i);
    inst.replay = "game=connect4\nmoves=" + moves +
                  "\nsearch_depth=" + std::to_string(inst.depth) + "\n";
    out.push_back(std::move(inst));
  }
  return out;
}

std::string fail(const Instance& inst, const std::string& check,
                 const std::string& detail) {
  return check + " violated on " + inst.id + ": " + detail + "\nreplay:\n" +
         inst.replay;
}

}  // namespace

std::vector<Instance> make_instances(const SuiteConfig& cfg) {
  if (cfg.game == "synthetic") return synthetic_instances(cfg);
  if (cfg.game == "connect4") return connect4_instances(cfg);
  throw std::invalid_argument("unknown game: " + cfg.game);
}

std::optional<Value> instance_oracle(const Instance& inst) {
  try {
    return oracle_minimax(*inst.model, inst.root, inst.depth);
  } catch (const OracleLimitExceeded&) {
    return std::nullopt;
  }
}

std::optional<std::string> check_value_agreement(const Instance& inst,
                                                 Value oracle,
                                                 const SuiteConfig& cfg) {
  const GameModel& m = *inst.model;
  const SearchOptions opt = search_options(cfg);
  SearchStats st;

  const Value plain = alphabeta_plain(m, inst.root, full_window(), inst.depth, st, opt);
  if (plain != oracle)
    return fail(inst, "value_agreement",
                "alphabeta_plain=" + fmt_val(plain) + " oracle=" + fmt_val(oracle));

  {
    TranspositionTable tt(tt_config(cfg));
    const Value v = alphabeta_with_memory(m, inst.root, full_window(),
                                          inst.depth, tt, st, opt);
    if (v != oracle)
      return fail(inst, "value_agreement",
                  "alphabeta_with_memory=" + fmt_val(v) + " oracle=" + fmt_val(oracle));
  }

  const Value nsv = negascout(m, inst.root, full_window(), inst.depth, st, opt);
  if (nsv != oracle)
    return fail(inst, "value_agreement",
                "negascout=" + fmt_val(nsv) + " oracle=" + fmt_val(oracle));

  for (const Pivot pivot :
       {Pivot::MtdF, Pivot::MtdPlusInf, Pivot::MtdMinusInf, Pivot::Bisect}) {
    for (const Guess guess :
         {Guess::Zero, Guess::PreviousIteration, Guess::TwoPliesAgo}) {
      TranspositionTable tt(tt_config(cfg));
      PivotPolicy policy = cfg.policy;
      policy.kind = pivot;
      const MtdOutcome o = iterative_deepening(m, inst.root, inst.depth, 0,
                                               guess, policy, tt, opt);
      if (!o.completed || o.value != oracle)
        return fail(inst, "value_agreement",
                    "mtd pivot=" + std::to_string(int(pivot)) +
                        " guess=" + std::to_string(int(guess)) + " value=" +
                        fmt_val(o.value) + " oracle=" + fmt_val(oracle));
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_zero_window_law(const Instance& inst,
                                                 Value oracle, int samples,
                                                 Rng& rng,
                                                 const SuiteConfig& cfg) {
  const SearchOptions opt = search_options(cfg);
  TranspositionTable tt(tt_config(cfg));
  for (int s = 0; s < samples; ++s) {
    // Half near the true value, half anywhere in the leaf range.
    const Value beta = (s % 2 == 0)
                           ? oracle + rng.range(-3, 4)
                           : rng.range(-(cfg.value_span + 2), cfg.value_span + 2);
    SearchStats st;
    const Value g = alphabeta_with_memory(*inst.model, inst.root,
                                          zero_window(beta), inst.depth, tt,
                                          st, opt);
    const bool ok = g >= beta ? oracle >= g : oracle <= g;
    if (!ok)
      return fail(inst, "zero_window_bound_law",
                  "beta=" + fmt_val(beta) + " g=" + fmt_val(g) +
                      " oracle=" + fmt_val(oracle));
  }
  return std::nullopt;
}

std::optional<std::string> check_mtd_bounds(const Instance& inst, Value oracle,
                                            const SuiteConfig& cfg) {
  const SearchOptions opt = search_options(cfg);
  struct Run {
    Pivot pivot;
    Value f;
    bool two_pass;  // must converge in exactly two passes
  };
  const Run runs[] = {
      {Pivot::MtdF, 0, false},           {Pivot::MtdF, oracle, true},
      {Pivot::MtdF, oracle + 7, false},  {Pivot::MtdF, oracle - 7, false},
      {Pivot::MtdPlusInf, 0, false},     {Pivot::MtdMinusInf, 0, false},
      {Pivot::Bisect, 0, false},
  };
  for (const Run& run : runs) {
    TranspositionTable tt(tt_config(cfg));
    SearchStats st;
    PivotPolicy policy = cfg.policy;
    policy.kind = run.pivot;
    const MtdOutcome o =
        mtd(*inst.model, inst.root, run.f, inst.depth, policy, tt, st, opt);
    if (o.value != oracle)
      return fail(inst, "mtd_convergence",
                  "value=" + fmt_val(o.value) + " oracle=" + fmt_val(oracle));
    Value lo = -kInf, hi = kInf;
    for (const PassRecord& p : o.trace) {
      const bool lower_moved = p.lower != lo;
      const bool upper_moved = p.upper != hi;
      if (lower_moved == upper_moved)
        return fail(inst, "one_bound_per_pass",
                    "pass " + std::to_string(p.index) + " moved " +
                        (lower_moved ? "both bounds" : "neither bound"));
      if (p.lower < lo || p.upper > hi)
        return fail(inst, "bound_monotonicity",
                    "pass " + std::to_string(p.index));
      if (p.lower > oracle || p.upper < oracle)
        return fail(inst, "sandwich_invariant",
                    "pass " + std::to_string(p.index) + " bounds [" +
                        fmt_val(p.lower) + ", " + fmt_val(p.upper) +
                        "] oracle=" + fmt_val(oracle));
      lo = p.lower;
      hi = p.upper;
    }
    if (run.two_pass && o.passes != 2)
      return fail(inst, "two_pass_law",
                  "f=oracle took " + std::to_string(o.passes) + " passes");
  }
  return std::nullopt;
}

std::optional<std::string> check_memory_idempotence(const Instance& inst,
                                                    const SuiteConfig& cfg) {
  const SearchOptions opt = search_options(cfg);
  TranspositionTable tt(tt_config(cfg));
  SearchStats first;
  const Value v1 = alphabeta_with_memory(*inst.model, inst.root, full_window(),
                                         inst.depth, tt, first, opt);
  SearchStats second;
  const Value v2 = alphabeta_with_memory(*inst.model, inst.root, full_window(),
                                         inst.depth, tt, second, opt);
  if (v1 != v2)
    return fail(inst, "memory_idempotence",
                "warm value " + fmt_val(v2) + " != " + fmt_val(v1));
  if (second.nodes_visited != 1)
    return fail(inst, "memory_idempotence",
                "warm repeat visited " + std::to_string(second.nodes_visited) +
                    " nodes");
  return std::nullopt;
}

std::optional<std::string> check_cutoff_monotonicity(const Instance& inst,
                                                     Value oracle, Rng& rng,
                                                     const SuiteConfig& cfg) {
  const SearchOptions opt = search_options(cfg);
  // Nested windows: full > mid > narrow, with mid straddling near the value.
  const Value a1 = oracle - Value(rng.below(12)) - 2;
  const Value b1 = oracle + Value(rng.below(12)) + 2;
  const Value a2 = a1 + Value(rng.below(std::uint64_t(b1 - a1 - 1)));
  const Value b2 = b1 - Value(rng.below(std::uint64_t(b1 - a2 - 1)));

  auto nodes = [&](Window w) {
    SearchStats st;
    alphabeta_plain(*inst.model, inst.root, w, inst.depth, st, opt);
    return st.nodes_visited;
  };
  const auto wide = nodes(full_window());
  const auto mid = nodes({a1, b1});
  const auto narrow = nodes({a2, b2});
  if (mid > wide || narrow > mid)
    return fail(inst, "cutoff_monotonicity",
                "nodes wide=" + std::to_string(wide) + " mid=" +
                    std::to_string(mid) + " narrow=" + std::to_string(narrow));
  return std::nullopt;
}

VerifyResult run_verify(const SuiteConfig& cfg) {
  VerifyResult res;
  std::ostringstream report;
  const auto instances = make_instances(cfg);
  Rng rng(mix64(cfg.master_seed ^ 0xbe7a5ULL));

  int checked = 0, skipped = 0;
  for (const Instance& inst : instances) {
    const auto oracle = instance_oracle(inst);
    if (!oracle) {
      report << "warning: oracle guard exceeded, skipping " << inst.id << "\n";
      ++skipped;
      continue;
    }
    ++checked;
    for (const auto& failure :
         {check_value_agreement(inst, *oracle, cfg),
          check_zero_window_law(inst, *oracle, 8, rng, cfg),
          check_mtd_bounds(inst, *oracle, cfg),
          check_memory_idempotence(inst, cfg),
          check_cutoff_monotonicity(inst, *oracle, rng, cfg)}) {
      if (failure) {
        report << "FAIL " << *failure << "\n";
        res.ok = false;
        res.exit_code = 1;
        res.report = report.str();
        return res;
      }
    }
  }
  report << "verify: " << checked << " instances ok";
  if (skipped) report << " (" << skipped << " skipped by oracle guard)";
  report << "\nchecks: value_agreement zero_window_bound_law mtd_bounds "
            "memory_idempotence cutoff_monotonicity\n";
  res.report = report.str();
  return res;
}

BenchRow run_algorithm(const Instance& inst, const std::string& algorithm,
                       const SuiteConfig& cfg) {
  const GameModel& m = *inst.model;
  const SearchOptions opt = search_options(cfg);
  BenchRow row;
  row.instance = inst.id;
  row.algorithm = algorithm;
  row.depth = inst.depth;

  if (algorithm == "alphabeta") {
    row.value = alphabeta_plain(m, inst.root, full_window(), inst.depth,
                                row.stats, opt);
  } else if (algorithm == "abmem") {
    TranspositionTable tt(tt_config(cfg));
    row.value = alphabeta_with_memory(m, inst.root, full_window(), inst.depth,
                                      tt, row.stats, opt);
  } else if (algorithm == "negascout") {
    row.value =
        negascout(m, inst.root, full_window(), inst.depth, row.stats, opt);
  } else if (algorithm == "negascout_tt") {
    // Iterative deepening with the memory-backed variant, the fair opponent
    // for the MTD drivers.
    TranspositionTable tt(tt_config(cfg));
    for (int d = 1; d <= inst.depth; ++d)
      row.value = negascout(m, inst.root, full_window(), d, row.stats, opt, &tt);
  } else {
    TranspositionTable tt(tt_config(cfg));
    PivotPolicy policy = cfg.policy;
    policy.kind = pivot_of(algorithm);
    const MtdOutcome o = iterative_deepening(
        m, inst.root, inst.depth, cfg.node_budget, cfg.guess, policy, tt, opt);
    row.value = o.value;
    row.stats = o.stats;
  }
  return row;
}

BenchResult run_bench(const SuiteConfig& cfg) {
  BenchResult res;
  const auto instances = make_instances(cfg);

  std::ostringstream csv;
  csv << "instance,algorithm,depth,value,nodes,leaves,passes,tt_probes,"
         "tt_hits,tt_stores,tt_cutoffs,tt_replacements,tt_depth_mismatches,"
         "researches\n";

  std::map<std::string, std::vector<double>> leaves_by_alg;
  std::map<std::string, std::map<std::uint64_t, int>> pass_hist;

  for (const Instance& inst : instances) {
    std::optional<Value> group_value;
    for (const std::string& alg : cfg.algorithms) {
      const BenchRow row = run_algorithm(inst, alg, cfg);
      if (!group_value) group_value = row.value;
      if (row.value != *group_value) res.values_agree = false;
      const SearchStats& s = row.stats;
      csv << row.instance << ',' << row.algorithm << ',' << row.depth << ','
          << row.value << ',' << s.nodes_visited << ',' << s.leaves_evaluated
          << ',' << s.passes << ',' << s.tt_probes << ',' << s.tt_hits << ','
          << s.tt_stores << ',' << s.tt_cutoffs << ',' << s.tt_replacements
          << ',' << s.tt_depth_mismatches << ',' << s.researches << '\n';
      leaves_by_alg[alg].push_back(double(std::max<std::uint64_t>(
          1, s.leaves_evaluated)));
      if (s.passes) pass_hist[alg][s.passes]++;
      res.rows.push_back(row);
    }
  }

  std::map<std::string, double> geomean;
  for (const auto& [alg, leaves] : leaves_by_alg) {
    double log_sum = 0;
    for (const double l : leaves) log_sum += std::log(l);
    geomean[alg] = std::exp(log_sum / double(leaves.size()));
  }
  std::string baseline;
  for (const std::string& cand : {"negascout", "negascout_tt"})
    if (geomean.count(cand)) {
      baseline = cand;
      break;
    }

  csv << '\n';
  for (const std::string& alg : cfg.algorithms) {
    csv << "summary," << alg << ",geomean_leaves," << std::fixed
        << std::setprecision(3) << geomean[alg];
    if (!baseline.empty())
      csv << ",ratio_vs_" << baseline << ',' << geomean[alg] / geomean[baseline];
    csv << '\n';
  }
  for (const auto& [alg, hist] : pass_hist)
    for (const auto& [passes, count] : hist)
      csv << "passes_hist," << alg << ',' << passes << ',' << count << '\n';
  if (!res.values_agree) csv << "error,value_mismatch_within_row_group\n";

  res.csv = csv.str();

  std::ostringstream text;
  text << std::left << std::setw(10) << "instance" << std::setw(14)
       << "algorithm" << std::right << std::setw(6) << "depth" << std::setw(10)
       << "value" << std::setw(12) << "nodes" << std::setw(12) << "leaves"
       << std::setw(8) << "passes" << '\n';
  for (const BenchRow& row : res.rows) {
    text << std::left << std::setw(10) << row.instance << std::setw(14)
         << row.algorithm << std::right << std::setw(6) << row.depth
         << std::setw(10) << row.value << std::setw(12)
         << row.stats.nodes_visited << std::setw(12)
         << row.stats.leaves_evaluated << std::setw(8) << row.stats.passes
         << '\n';
  }
  text << '\n';
  for (const std::string& alg : cfg.algorithms) {
    text << std::left << std::setw(14) << alg << " geomean leaves "
         << std::fixed << std::setprecision(3) << geomean[alg];
    if (!baseline.empty())
      text << "  (x" << geomean[alg] / geomean[baseline] << " vs " << baseline
           << ")";
    text << '\n';
  }
  res.text = text.str();
  return res;
}

std::string format_trace(const MtdOutcome& outcome) {
  std::ostringstream os;
  os << "pass,beta,g,lower,upper\n";
  for (const PassRecord& p : outcome.trace)
    os << p.index << ',' << fmt_val(p.beta) << ',' << fmt_val(p.g) << ','
       << fmt_val(p.lower) << ',' << fmt_val(p.upper) << '\n';
  os << "converged value=" << fmt_val(outcome.value)
     << " passes=" << outcome.passes << " best_move=" << outcome.best_move
     << '\n';
  return os.str();
}

std::string run_trace(const SuiteConfig& cfg) {
  SuiteConfig one = cfg;
  one.seeds = 1;
  one.mixed = false;
  const auto instances = make_instances(one);
  const Instance& inst = instances.front();
  TranspositionTable tt(tt_config(cfg));
  SearchStats st;
  const MtdOutcome o = mtd(*inst.model, inst.root, cfg.first_guess, inst.depth,
                           cfg.policy, tt, st, search_options(cfg));
  return format_trace(o);
}

}  // namespace mtd
