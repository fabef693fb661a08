#pragma once

#include "mtd/game.hpp"
#include "mtd/stats.hpp"
#include "mtd/tt.hpp"

namespace mtd {

struct Window {
  Value alpha;
  Value beta;  // invariant: alpha < beta
};

inline Window full_window() { return {-kInf, kInf}; }
inline Window zero_window(Value beta) { return {beta - 1, beta}; }

struct SearchOptions {
  bool store_leaves = true;
  std::uint64_t node_budget = 0;  // 0 = unlimited; exceeded -> BudgetExceeded
};

// Memory-free fail-soft AlphaBeta. Returns g with the usual bound semantics:
// alpha < g < beta  => g is the exact fixed-depth minimax value,
// g <= alpha        => g is an upper bound,
// g >= beta         => g is a lower bound.
Value alphabeta_plain(const GameModel& model, const Position& pos, Window w,
                      int depth, SearchStats& stats,
                      const SearchOptions& opt = {});

// Fail-soft AlphaBeta backed by a transposition table: narrows the window
// from stored bounds before descending, stores the resulting bound, and
// searches a stored best move first. Same value contract as alphabeta_plain.
// When root_best is non-null it receives the move that produced g at the top
// call.
Value alphabeta_with_memory(const GameModel& model, const Position& pos,
                            Window w, int depth, TranspositionTable& table,
                            SearchStats& stats, const SearchOptions& opt = {},
                            Move* root_best = nullptr);

// NegaScout (Reinefeld), negamax over the same models; MIN nodes negate
// internally, the returned value is from Max's perspective like everything
// else. Memory-free unless a table is supplied.
Value negascout(const GameModel& model, const Position& pos, Window w,
                int depth, SearchStats& stats, const SearchOptions& opt = {},
                TranspositionTable* table = nullptr,
                Move* root_best = nullptr);

}  // namespace mtd
