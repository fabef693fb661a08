#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mtd/common.hpp"

namespace mtd {

using Move = int;
inline constexpr Move kNoMove = -1;

// Opaque game state. The two state words are interpreted by the owning model;
// key/kind/ply are maintained by the model on every transition.
struct Position {
  std::array<std::uint64_t, 2> state{};
  std::uint64_t key = 0;
  NodeKind kind = NodeKind::Max;
  int ply = 0;
};

struct Child {
  Move move = kNoMove;
  Position pos;
};

// Pluggable rules interface. Models are immutable after construction and safe
// to share across searches.
class GameModel {
 public:
  virtual ~GameModel() = default;

  virtual Position root() const = 0;

  virtual bool is_terminal(const Position& pos) const = 0;

  // Ordered successor list. Never empty; calling this on a terminal position
  // is a contract violation and throws.
  virtual std::vector<Child> children(const Position& pos) const = 0;

  // Static evaluation from Max's perspective, always in [-kValMax, kValMax].
  // Total on all positions (searches evaluate wherever the depth budget runs
  // out, not only at the tree frontier).
  virtual Value evaluate(const Position& pos) const = 0;
};

}  // namespace mtd
