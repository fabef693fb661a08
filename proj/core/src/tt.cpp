#include "mtd/tt.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtd {

TranspositionTable::TranspositionTable(TTConfig cfg) : cfg_(cfg) {
  if (cfg.log2_slots < 10 || cfg.log2_slots > 28)
    throw std::invalid_argument("tt: log2_slots must be in [10, 28]");
  entries_.resize(std::size_t{1} << cfg.log2_slots);
  mask_ = (std::uint64_t{1} << cfg.log2_slots) - 1;
}

ProbeResult TranspositionTable::probe(std::uint64_t key, int depth) const {
  ProbeResult r;
  const Entry& e = entries_[key & mask_];
  if (!e.used || e.key != key) return r;
  r.key_hit = true;
  r.best_move = e.best_move;
  if (e.depth == depth || (cfg_.accept_deeper && e.depth >= depth)) {
    r.bounds_valid = true;
    r.bounds = e.bounds;
  }
  return r;
}

StoreResult TranspositionTable::store(std::uint64_t key, int depth,
                                      BoundUpdate update, Move best_move) {
  Entry& e = entries_[key & mask_];

  auto apply = [&](Entry& t) {
    switch (update.kind) {
      case BoundUpdate::Lower:
        t.bounds.lower = std::max(t.bounds.lower, update.value);
        if (t.bounds.lower > t.bounds.upper) t.bounds.upper = kInf;
        break;
      case BoundUpdate::Upper:
        t.bounds.upper = std::min(t.bounds.upper, update.value);
        if (t.bounds.upper < t.bounds.lower) t.bounds.lower = -kInf;
        break;
      case BoundUpdate::Exact:
        t.bounds.lower = update.value;
        t.bounds.upper = update.value;
        break;
    }
    if (best_move != kNoMove) t.best_move = best_move;
  };

  if (!e.used) {
    e = Entry{};
    e.used = true;
    e.key = key;
    e.depth = depth;
    apply(e);
    return StoreResult::Fresh;
  }
  if (e.key == key && e.depth == depth) {
    apply(e);
    return StoreResult::Tightened;
  }
  // Different position or different depth in this slot: depth-preferred
  // replacement.
  if (depth >= e.depth) {
    e = Entry{};
    e.used = true;
    e.key = key;
    e.depth = depth;
    apply(e);
    return StoreResult::Replaced;
  }
  return StoreResult::Dropped;
}

void TranspositionTable::clear() {
  std::fill(entries_.begin(), entries_.end(), Entry{});
}

}  // namespace mtd
