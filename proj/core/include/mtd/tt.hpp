#pragma once

#include <cstdint>
#include <vector>

#include "mtd/common.hpp"
#include "mtd/game.hpp"

namespace mtd {

// Lower/upper bound pair on a node's fixed-depth minimax value.
struct Bounds {
  Value lower = -kInf;
  Value upper = kInf;
};

struct BoundUpdate {
  enum Kind { Lower, Upper, Exact };
  Kind kind;
  Value value;
};

struct ProbeResult {
  bool key_hit = false;      // slot holds this key; best_move is meaningful
  bool bounds_valid = false; // depth also matched
  Bounds bounds;
  Move best_move = kNoMove;
};

enum class StoreResult { Fresh, Tightened, Replaced, Dropped };

struct TTConfig {
  int log2_slots = 16;  // capacity = 2^log2_slots, fixed at construction
  // Accept stored bounds when stored depth >= probe depth, the "ordinary"
  // table behavior. Off by default: exact depth match keeps searches
  // bit-comparable against the brute-force oracle.
  bool accept_deeper = false;
};

// Single-entry slots indexed by key mod capacity. Replacement is
// depth-preferred: an incoming store wins the slot iff its depth >= the
// stored depth.
class TranspositionTable {
 public:
  explicit TranspositionTable(TTConfig cfg = {});

  ProbeResult probe(std::uint64_t key, int depth) const;

  StoreResult store(std::uint64_t key, int depth, BoundUpdate update,
                    Move best_move = kNoMove);

  void clear();

  std::size_t capacity() const { return entries_.size(); }

 private:
  struct Entry {
    std::uint64_t key = 0;
    Bounds bounds;
    std::int32_t depth = 0;
    Move best_move = kNoMove;
    bool used = false;
  };

  TTConfig cfg_;
  std::vector<Entry> entries_;
  std::uint64_t mask_;
};

}  // namespace mtd
