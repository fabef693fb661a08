#include "mtd/mtd.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtd {
namespace {

Value choose_pivot(const PivotPolicy& policy, Value g, Value lower, Value upper,
                   int dir, int run_len) {
  Value beta;
  if (policy.kind == Pivot::Bisect && lower > -kInf && upper < kInf) {
    // Midpoint, rounding toward the lower bound.
    beta = lower + (upper - lower) / 2;
  } else {
    beta = (g == lower) ? g + 1 : g;
  }
  if (policy.step_bonus > 0 && dir != 0 && policy.bonus_period > 0 &&
      run_len > 0 && run_len % policy.bonus_period == 0) {
    beta += dir * policy.step_bonus;
  }
  // Keep the pivot informative: lower < beta <= upper.
  beta = std::max(beta, lower + 1);
  beta = std::min(beta, upper);
  return beta;
}

}  // namespace

MtdOutcome mtd(const GameModel& model, const Position& root, Value f,
               int depth, const PivotPolicy& policy, TranspositionTable& table,
               SearchStats& stats, const SearchOptions& opt) {
  if (depth < 1) throw std::invalid_argument("mtd: depth must be >= 1");

  Value g = std::clamp(f, -kInf, kInf);
  if (policy.kind == Pivot::MtdPlusInf) g = kInf;
  if (policy.kind == Pivot::MtdMinusInf) g = -kInf;

  MtdOutcome out;
  out.depth = depth;

  Value lower = -kInf;
  Value upper = kInf;
  Move best = kNoMove;
  int dir = 0;      // +1 while failing high, -1 while failing low
  int run_len = 0;  // consecutive passes in that direction
  int passes = 0;

  do {
    if (passes >= 2LL * kInf)
      throw std::logic_error("mtd: watchdog tripped, bounds not converging");
    const Value beta = choose_pivot(policy, g, lower, upper, dir, run_len);
    Move pass_move = kNoMove;
    g = alphabeta_with_memory(model, root, zero_window(beta), depth, table,
                              stats, opt, &pass_move);
    ++passes;
    ++stats.passes;
    const int pass_dir = g < beta ? -1 : +1;
    if (g < beta) {
      upper = g;
    } else {
      lower = g;
      if (pass_move != kNoMove) best = pass_move;
    }
    run_len = pass_dir == dir ? run_len + 1 : 1;
    dir = pass_dir;
    out.trace.push_back({passes, beta, g, lower, upper});
  } while (lower < upper);

  if (best == kNoMove) best = table.probe(root.key, depth).best_move;

  out.value = g;
  out.best_move = best;
  out.passes = passes;
  out.final_bounds = {lower, upper};
  out.completed = true;
  out.stats = stats;
  return out;
}

MtdOutcome iterative_deepening(const GameModel& model, const Position& root,
                               int max_depth, std::uint64_t node_budget,
                               Guess guess, const PivotPolicy& policy,
                               TranspositionTable& table,
                               const SearchOptions& opt) {
  if (max_depth < 1)
    throw std::invalid_argument("iterative_deepening: max_depth must be >= 1");

  SearchOptions run_opt = opt;
  if (node_budget) run_opt.node_budget = node_budget;

  SearchStats stats;
  std::vector<Value> history;
  MtdOutcome last;  // distinguished "no completed iteration" outcome

  for (int d = 1; d <= max_depth; ++d) {
    Value f = 0;
    if (guess == Guess::PreviousIteration && !history.empty()) {
      f = history.back();
    } else if (guess == Guess::TwoPliesAgo) {
      if (history.size() >= 2)
        f = history[history.size() - 2];
      else if (!history.empty())
        f = history.back();
    }
    try {
      last = mtd(model, root, f, d, policy, table, stats, run_opt);
    } catch (const BudgetExceeded&) {
      break;
    }
    history.push_back(last.value);
    if (run_opt.node_budget && stats.nodes_visited >= run_opt.node_budget)
      break;
  }
  last.stats = stats;
  return last;
}

}  // namespace mtd
