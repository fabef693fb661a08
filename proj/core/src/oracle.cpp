#include "mtd/oracle.hpp"

#include <algorithm>

namespace mtd {
namespace {

Value enumerate(const GameModel& m, const Position& pos, int depth,
                std::uint64_t guard, std::uint64_t& leaves) {
  if (depth == 0 || m.is_terminal(pos)) {
    if (++leaves > guard) throw OracleLimitExceeded{};
    return m.evaluate(pos);
  }
  const auto kids = m.children(pos);
  Value v = pos.kind == NodeKind::Max ? -kInf : kInf;
  for (const Child& ch : kids) {
    const Value c = enumerate(m, ch.pos, depth - 1, guard, leaves);
    v = pos.kind == NodeKind::Max ? std::max(v, c) : std::min(v, c);
  }
  return v;
}

}  // namespace

Value oracle_minimax(const GameModel& model, const Position& pos, int depth,
                     std::uint64_t leaf_guard) {
  std::uint64_t leaves = 0;
  return enumerate(model, pos, depth, leaf_guard, leaves);
}

bool oracle_check_bound(const GameModel& model, const Position& pos, int depth,
                        Value g, BoundDirection dir, std::uint64_t leaf_guard) {
  const Value v = oracle_minimax(model, pos, depth, leaf_guard);
  return dir == BoundDirection::Upper ? v <= g : v >= g;
}

}  // namespace mtd
