#include "mtd/search.hpp"

#include <algorithm>

namespace mtd {
namespace {

void hoist_move(std::vector<Child>& kids, Move m) {
  if (m == kNoMove) return;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].move == m) {
      std::rotate(kids.begin(), kids.begin() + i, kids.begin() + i + 1);
      return;
    }
  }
}

struct PlainCtx {
  const GameModel& m;
  SearchStats& st;
  const SearchOptions& opt;
};

Value ab_plain(PlainCtx& c, const Position& pos, Value alpha, Value beta,
               int depth) {
  ++c.st.nodes_visited;
  if (c.opt.node_budget && c.st.nodes_visited > c.opt.node_budget)
    throw BudgetExceeded{};
  if (depth == 0 || c.m.is_terminal(pos)) {
    ++c.st.leaves_evaluated;
    return c.m.evaluate(pos);
  }
  const auto kids = c.m.children(pos);
  Value g;
  if (pos.kind == NodeKind::Max) {
    g = -kInf;
    Value a = alpha;
    for (const Child& ch : kids) {
      if (g >= beta) break;
      g = std::max(g, ab_plain(c, ch.pos, a, beta, depth - 1));
      a = std::max(a, g);
    }
  } else {
    g = kInf;
    Value b = beta;
    for (const Child& ch : kids) {
      if (g <= alpha) break;
      g = std::min(g, ab_plain(c, ch.pos, alpha, b, depth - 1));
      b = std::min(b, g);
    }
  }
  return g;
}

struct MemCtx {
  const GameModel& m;
  TranspositionTable& tt;
  SearchStats& st;
  const SearchOptions& opt;
};

void record_store(MemCtx& c, StoreResult r) {
  ++c.st.tt_stores;
  if (r == StoreResult::Replaced) ++c.st.tt_replacements;
}

Value ab_mem(MemCtx& c, const Position& pos, Value alpha, Value beta,
             int depth, Move* best_out) {
  ++c.st.nodes_visited;
  if (c.opt.node_budget && c.st.nodes_visited > c.opt.node_budget)
    throw BudgetExceeded{};

  Move tt_move = kNoMove;
  ++c.st.tt_probes;
  const ProbeResult pr = c.tt.probe(pos.key, depth);
  if (pr.key_hit) {
    tt_move = pr.best_move;
    if (!pr.bounds_valid) ++c.st.tt_depth_mismatches;
  }
  if (pr.bounds_valid) {
    ++c.st.tt_hits;
    const Bounds& tb = pr.bounds;
    if (tb.lower >= beta || tb.upper <= alpha || tb.lower == tb.upper) {
      ++c.st.tt_cutoffs;
      if (best_out) *best_out = pr.best_move;
      return tb.lower >= beta ? tb.lower
             : tb.upper <= alpha ? tb.upper
                                 : tb.lower;
    }
    alpha = std::max(alpha, tb.lower);
    beta = std::min(beta, tb.upper);
  }

  if (depth == 0 || c.m.is_terminal(pos)) {
    ++c.st.leaves_evaluated;
    const Value g = c.m.evaluate(pos);
    if (c.opt.store_leaves)
      record_store(c, c.tt.store(pos.key, depth, {BoundUpdate::Exact, g}));
    if (best_out) *best_out = kNoMove;
    return g;
  }

  auto kids = c.m.children(pos);
  hoist_move(kids, tt_move);

  Value g;
  Move best = kNoMove;
  if (pos.kind == NodeKind::Max) {
    g = -kInf;
    Value a = alpha;
    for (const Child& ch : kids) {
      if (g >= beta) break;
      const Value v = ab_mem(c, ch.pos, a, beta, depth - 1, nullptr);
      if (v > g) {
        g = v;
        best = ch.move;
      }
      a = std::max(a, g);
    }
  } else {
    g = kInf;
    Value b = beta;
    for (const Child& ch : kids) {
      if (g <= alpha) break;
      const Value v = ab_mem(c, ch.pos, alpha, b, depth - 1, nullptr);
      if (v < g) {
        g = v;
        best = ch.move;
      }
      b = std::min(b, g);
    }
  }

  if (g <= alpha)
    record_store(c, c.tt.store(pos.key, depth, {BoundUpdate::Upper, g}, best));
  else if (g >= beta)
    record_store(c, c.tt.store(pos.key, depth, {BoundUpdate::Lower, g}, best));
  else
    record_store(c, c.tt.store(pos.key, depth, {BoundUpdate::Exact, g}, best));

  if (best_out) *best_out = best;
  return g;
}

struct NsCtx {
  const GameModel& m;
  SearchStats& st;
  const SearchOptions& opt;
  TranspositionTable* tt;
};

// Mover-perspective negamax NegaScout. The table always stores bounds from
// Max's perspective so entries stay comparable with the minimax searchers.
Value ns(NsCtx& c, const Position& pos, Value alpha, Value beta, int depth,
         Move* best_out) {
  ++c.st.nodes_visited;
  if (c.opt.node_budget && c.st.nodes_visited > c.opt.node_budget)
    throw BudgetExceeded{};

  const bool max_node = pos.kind == NodeKind::Max;
  Move tt_move = kNoMove;
  if (c.tt) {
    ++c.st.tt_probes;
    const ProbeResult pr = c.tt->probe(pos.key, depth);
    if (pr.key_hit) {
      tt_move = pr.best_move;
      if (!pr.bounds_valid) ++c.st.tt_depth_mismatches;
    }
    if (pr.bounds_valid) {
      ++c.st.tt_hits;
      const Value lo = max_node ? pr.bounds.lower : -pr.bounds.upper;
      const Value hi = max_node ? pr.bounds.upper : -pr.bounds.lower;
      if (lo >= beta || hi <= alpha || lo == hi) {
        ++c.st.tt_cutoffs;
        if (best_out) *best_out = pr.best_move;
        return lo >= beta ? lo : hi <= alpha ? hi : lo;
      }
      alpha = std::max(alpha, lo);
      beta = std::min(beta, hi);
    }
  }

  if (depth == 0 || c.m.is_terminal(pos)) {
    ++c.st.leaves_evaluated;
    const Value v = c.m.evaluate(pos);
    if (c.tt && c.opt.store_leaves) {
      const StoreResult r = c.tt->store(pos.key, depth, {BoundUpdate::Exact, v});
      ++c.st.tt_stores;
      if (r == StoreResult::Replaced) ++c.st.tt_replacements;
    }
    if (best_out) *best_out = kNoMove;
    return max_node ? v : -v;
  }

  auto kids = c.m.children(pos);
  hoist_move(kids, tt_move);

  Value a = alpha;
  Value b = beta;
  Value best = -kInf;
  Move best_move = kNoMove;
  int i = 0;
  for (const Child& ch : kids) {
    ++i;
    Value t = -ns(c, ch.pos, -b, -a, depth - 1, nullptr);
    if (t > a && t < beta && i > 1 && depth >= 2) {
      // Null window failed high without being exact: re-search. Nodes one
      // ply above the frontier are exempt, their null-window results are
      // already exact.
      ++c.st.researches;
      t = std::max(t, -ns(c, ch.pos, -beta, -t, depth - 1, nullptr));
    }
    if (t > best) {
      best = t;
      best_move = ch.move;
    }
    a = std::max(a, t);
    if (a >= beta) break;  // cut-off
    b = a + 1;             // null window for the next sibling
  }

  if (c.tt) {
    const Value vmax = max_node ? best : -best;
    BoundUpdate u{BoundUpdate::Exact, vmax};
    if (best <= alpha)
      u.kind = max_node ? BoundUpdate::Upper : BoundUpdate::Lower;
    else if (best >= beta)
      u.kind = max_node ? BoundUpdate::Lower : BoundUpdate::Upper;
    const StoreResult r = c.tt->store(pos.key, depth, u, best_move);
    ++c.st.tt_stores;
    if (r == StoreResult::Replaced) ++c.st.tt_replacements;
  }

  if (best_out) *best_out = best_move;
  return best;
}

}  // namespace

Value alphabeta_plain(const GameModel& model, const Position& pos, Window w,
                      int depth, SearchStats& stats, const SearchOptions& opt) {
  PlainCtx c{model, stats, opt};
  return ab_plain(c, pos, w.alpha, w.beta, depth);
}

Value alphabeta_with_memory(const GameModel& model, const Position& pos,
                            Window w, int depth, TranspositionTable& table,
                            SearchStats& stats, const SearchOptions& opt,
                            Move* root_best) {
  MemCtx c{model, table, stats, opt};
  return ab_mem(c, pos, w.alpha, w.beta, depth, root_best);
}

Value negascout(const GameModel& model, const Position& pos, Window w,
                int depth, SearchStats& stats, const SearchOptions& opt,
                TranspositionTable* table, Move* root_best) {
  NsCtx c{model, stats, opt, table};
  if (pos.kind == NodeKind::Max) return ns(c, pos, w.alpha, w.beta, depth, root_best);
  return -ns(c, pos, -w.beta, -w.alpha, depth, root_best);
}

}  // namespace mtd
