#pragma once

#include <vector>

#include "mtd/search.hpp"
#include "mtd/stats.hpp"
#include "mtd/tt.hpp"

namespace mtd {

enum class Pivot { MtdF, MtdPlusInf, MtdMinusInf, Bisect };

struct PivotPolicy {
  Pivot kind = Pivot::MtdF;
  // Fine-grain evaluation helper: every bonus_period consecutive passes in
  // the same search direction, push the pivot an extra step_bonus that way.
  // step_bonus = 0 reproduces the plain policy exactly.
  Value step_bonus = 0;
  int bonus_period = 2;
};

enum class Guess { Zero, PreviousIteration, TwoPliesAgo };

struct PassRecord {
  int index;
  Value beta;   // pivot used for this pass
  Value g;      // zero-window result
  Value lower;  // bounds after the pass
  Value upper;
};

struct MtdOutcome {
  Value value = 0;
  Move best_move = kNoMove;
  int passes = 0;
  Bounds final_bounds;
  SearchStats stats;
  std::vector<PassRecord> trace;
  int depth = 0;          // deepest completed iteration (= search depth)
  bool completed = false; // false: budget ran out before any iteration
};

// Zero-window re-search driver. Converges on the exact fixed-depth minimax
// value; stats accumulate into the caller's counters (shared across
// iterations under iterative deepening).
MtdOutcome mtd(const GameModel& model, const Position& root, Value f,
               int depth, const PivotPolicy& policy, TranspositionTable& table,
               SearchStats& stats, const SearchOptions& opt = {});

// d = 1..max_depth, each iteration seeded per the guess policy. node_budget
// (0 = unlimited) is cumulative and deterministic; the outcome of the last
// fully completed iteration is returned.
MtdOutcome iterative_deepening(const GameModel& model, const Position& root,
                               int max_depth, std::uint64_t node_budget,
                               Guess guess, const PivotPolicy& policy,
                               TranspositionTable& table,
                               const SearchOptions& opt = {});

inline Move best_move_of(const MtdOutcome& outcome) { return outcome.best_move; }

}  // namespace mtd
