#include <doctest.h>

#include <cmath>

#include "mtd/connect4.hpp"
#include "mtd/mtd.hpp"
#include "mtd/oracle.hpp"
#include "mtd/synthetic.hpp"
#include "support/fixed_tree.hpp"

using namespace mtd;

namespace {
MtdOutcome run_mtd(const GameModel& m, const Position& root, Value f, int depth,
                   PivotPolicy policy = {}) {
  TranspositionTable tt(TTConfig{12});
  SearchStats st;
  return mtd::mtd(m, root, f, depth, policy, tt, st);
}
}  // namespace

TEST_CASE("feeding the minimax value converges in exactly two passes") {
  const auto t = test::four_leaf_tree();
  const MtdOutcome o = run_mtd(t, t.root(), 3, 2);
  CHECK(o.value == 3);
  CHECK(o.passes == 2);
  CHECK(o.final_bounds.lower >= o.final_bounds.upper);
}

TEST_CASE("mtd from a cold guess still converges on the 4-leaf tree") {
  const MtdOutcome o = run_mtd(test::four_leaf_tree(),
                               test::four_leaf_tree().root(), 0, 2);
  CHECK(o.value == 3);
  // Hand-traced: pass 1 at beta=0 fails high to 3, pass 2 at beta=4 fails
  // low to 3.
  CHECK(o.passes == 2);
  CHECK(o.best_move == 0);  // the (3, 17) subtree is the only one worth 3
}

TEST_CASE("all pivot policies agree with the oracle") {
  Rng rng(88);
  for (int i = 0; i < 20; ++i) {
    SyntheticTreeSpec spec;
    spec.branching = rng.range(2, 4);
    spec.depth = rng.range(2, 6);
    spec.seed = rng.next();
    const SyntheticModel m(spec);
    const Value oracle = oracle_minimax(m, m.root(), spec.depth);
    for (const Pivot p :
         {Pivot::MtdF, Pivot::MtdPlusInf, Pivot::MtdMinusInf, Pivot::Bisect}) {
      PivotPolicy policy;
      policy.kind = p;
      const MtdOutcome o = run_mtd(m, m.root(), 0, spec.depth, policy);
      CHECK(o.value == oracle);
    }
  }
}

TEST_CASE("MTD(+inf) descends through upper bounds only until collision") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 4;
  spec.seed = 9;
  const SyntheticModel m(spec);
  PivotPolicy policy;
  policy.kind = Pivot::MtdPlusInf;
  const MtdOutcome o = run_mtd(m, m.root(), 0, spec.depth, policy);
  Value prev_upper = kInf;
  for (std::size_t i = 0; i + 1 < o.trace.size(); ++i) {
    CHECK(o.trace[i].upper < prev_upper);  // strictly zooming down
    CHECK(o.trace[i].lower == -kInf);      // lower moves only on the last pass
    prev_upper = o.trace[i].upper;
  }
  CHECK(o.value == oracle_minimax(m, m.root(), spec.depth));
}

TEST_CASE("sandwich invariant and one bound per pass") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    SyntheticTreeSpec spec;
    spec.branching = 3;
    spec.depth = 5;
    spec.seed = rng.next();
    const SyntheticModel m(spec);
    const Value oracle = oracle_minimax(m, m.root(), spec.depth);
    const MtdOutcome o = run_mtd(m, m.root(), Value(rng.below(40)) - 20,
                                 spec.depth);
    Value lo = -kInf, hi = kInf;
    for (const PassRecord& p : o.trace) {
      CHECK(p.lower <= oracle);
      CHECK(p.upper >= oracle);
      CHECK((p.lower != lo) != (p.upper != hi));
      CHECK(p.lower >= lo);
      CHECK(p.upper <= hi);
      lo = p.lower;
      hi = p.upper;
    }
  }
}

TEST_CASE("bisection halves the finite interval") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 5;
  spec.seed = 3;
  spec.value_span = 1000;
  const SyntheticModel m(spec);
  PivotPolicy policy;
  policy.kind = Pivot::Bisect;
  const MtdOutcome o = run_mtd(m, m.root(), 0, spec.depth, policy);
  int finite_passes = 0;
  Value width = -1;
  for (const PassRecord& p : o.trace) {
    if (p.lower > -kInf && p.upper < kInf) {
      if (width >= 0) CHECK(p.upper - p.lower <= (width + 1) / 2);
      width = p.upper - p.lower;
      ++finite_passes;
    }
  }
  if (width > 0)
    CHECK(finite_passes <= int(std::ceil(std::log2(double(width)))) + 2);
}

TEST_CASE("step_bonus = 0 reproduces the plain pivot trace") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 5;
  spec.seed = 14;
  const SyntheticModel m(spec);
  PivotPolicy with_period;
  with_period.step_bonus = 0;
  with_period.bonus_period = 1;
  const MtdOutcome a = run_mtd(m, m.root(), -40, spec.depth);
  const MtdOutcome b = run_mtd(m, m.root(), -40, spec.depth, with_period);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].beta == b.trace[i].beta);
}

TEST_CASE("step_bonus still converges to the exact value") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 5;
  spec.seed = 15;
  spec.value_span = 5000;  // fine grain, long searches without a bonus
  const SyntheticModel m(spec);
  const Value oracle = oracle_minimax(m, m.root(), spec.depth);
  PivotPolicy boosted;
  boosted.step_bonus = 50;
  boosted.bonus_period = 2;
  const MtdOutcome o = run_mtd(m, m.root(), -4000, spec.depth, boosted);
  CHECK(o.value == oracle);
}

TEST_CASE("iterative deepening at max_depth 1 equals a single mtd call") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 4;
  spec.seed = 77;
  const SyntheticModel m(spec);
  TranspositionTable tt(TTConfig{12});
  const MtdOutcome id =
      iterative_deepening(m, m.root(), 1, 0, Guess::Zero, {}, tt);
  const MtdOutcome single = run_mtd(m, m.root(), 0, 1);
  CHECK(id.completed);
  CHECK(id.value == single.value);
  CHECK(id.passes == single.passes);
  CHECK(id.depth == 1);
}

TEST_CASE("guess policies reach the same final value") {
  SyntheticTreeSpec spec;
  spec.branching = 3;
  spec.depth = 6;
  spec.seed = 5;
  spec.ordering_quality = 0.9;
  const SyntheticModel m(spec);
  const Value oracle = oracle_minimax(m, m.root(), spec.depth);
  for (const Guess g :
       {Guess::Zero, Guess::PreviousIteration, Guess::TwoPliesAgo}) {
    TranspositionTable tt(TTConfig{14});
    const MtdOutcome o = iterative_deepening(m, m.root(), spec.depth, 0, g, {}, tt);
    CHECK(o.value == oracle);
  }
}

TEST_CASE("two-plies-ago guessing does not lose to a zero guess") {
  // On these trees the root value swings with depth parity, so the previous
  // iteration is a biased guess; the matching-parity guess is the informed
  // one and must beat guessing zero.
  std::uint64_t passes_zero = 0, passes_two = 0;
  Rng rng(606);
  for (int i = 0; i < 30; ++i) {
    SyntheticTreeSpec spec;
    spec.branching = 3;
    spec.depth = 6;
    spec.seed = rng.next();
    spec.ordering_quality = 0.9;
    const SyntheticModel m(spec);
    for (const auto [guess, acc] :
         {std::pair{Guess::Zero, &passes_zero},
          std::pair{Guess::TwoPliesAgo, &passes_two}}) {
      TranspositionTable tt(TTConfig{14});
      const MtdOutcome o =
          iterative_deepening(m, m.root(), spec.depth, 0, guess, {}, tt);
      *acc += o.stats.passes;
    }
  }
  CHECK(passes_two <= passes_zero);
}

TEST_CASE("two-plies-ago guessing wins under parity oscillation") {
  std::uint64_t passes_prev = 0, passes_two = 0;
  Rng rng(707);
  for (int i = 0; i < 30; ++i) {
    SyntheticTreeSpec spec;
    spec.branching = 3;
    spec.depth = 6;
    spec.seed = rng.next();
    spec.ordering_quality = 0.9;
    spec.value_span = 30;
    spec.parity_offset = 60;  // strong odd/even oscillation
    const SyntheticModel m(spec);
    for (const auto [guess, acc] :
         {std::pair{Guess::PreviousIteration, &passes_prev},
          std::pair{Guess::TwoPliesAgo, &passes_two}}) {
      TranspositionTable tt(TTConfig{14});
      const MtdOutcome o =
          iterative_deepening(m, m.root(), spec.depth, 0, guess, {}, tt);
      *acc += o.stats.passes;
    }
  }
  CHECK(passes_two < passes_prev);
}

TEST_CASE("a budget too small for depth 1 yields the distinguished outcome") {
  SyntheticTreeSpec spec;
  spec.branching = 4;
  spec.depth = 4;
  const SyntheticModel m(spec);
  TranspositionTable tt(TTConfig{12});
  const MtdOutcome o =
      iterative_deepening(m, m.root(), spec.depth, 2, Guess::Zero, {}, tt);
  CHECK_FALSE(o.completed);
  CHECK(o.best_move == kNoMove);
}

TEST_CASE("the budget stops deepening but keeps the last completed result") {
  SyntheticTreeSpec spec;
  spec.branching = 4;
  spec.depth = 6;
  spec.seed = 8;
  const SyntheticModel m(spec);
  TranspositionTable big(TTConfig{14});
  const MtdOutcome unbounded =
      iterative_deepening(m, m.root(), spec.depth, 0, Guess::Zero, {}, big);
  TranspositionTable tt(TTConfig{14});
  const std::uint64_t budget = unbounded.stats.nodes_visited / 3;
  const MtdOutcome o =
      iterative_deepening(m, m.root(), spec.depth, budget, Guess::Zero, {}, tt);
  CHECK(o.completed);
  CHECK(o.depth < spec.depth);
  CHECK(o.value == oracle_minimax(m, m.root(), o.depth));
}

TEST_CASE("best move: forced moves and winning lines") {
  const Connect4Model c4;
  // Max to move with an immediate vertical win in column 0.
  const Position win_in_one = c4.after_moves({0, 1, 0, 1, 0, 1});
  TranspositionTable tt(TTConfig{14});
  SearchStats st;
  const MtdOutcome o = mtd::mtd(c4, win_in_one, 0, 3, {}, tt, st);
  CHECK(o.best_move == 0);
  CHECK(o.value == kValMax - 7);

  // Applying the returned move must preserve the root value one ply down.
  const Position after = c4.apply(win_in_one, best_move_of(o));
  CHECK(oracle_minimax(c4, after, 2) == o.value);
}

TEST_CASE("single legal move is returned as the best move") {
  SyntheticTreeSpec spec;
  spec.branching = 1;
  spec.depth = 3;
  spec.seed = 2;
  const SyntheticModel m(spec);
  const MtdOutcome o = run_mtd(m, m.root(), 0, 3);
  CHECK(o.best_move == 0);
}
