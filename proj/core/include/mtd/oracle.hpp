#pragma once

#include <cstdint>
#include <stdexcept>

#include "mtd/game.hpp"

namespace mtd {

// Thrown when a brute-force enumeration would exceed the leaf guard.
struct OracleLimitExceeded : std::runtime_error {
  OracleLimitExceeded() : std::runtime_error("oracle: leaf guard exceeded") {}
};

inline constexpr std::uint64_t kOracleLeafGuard = 10'000'000;

enum class BoundDirection { Upper, Lower };

// Exact fixed-depth minimax by full enumeration. No pruning, no memory, so it
// cannot share a bug with the searchers it checks.
Value oracle_minimax(const GameModel& model, const Position& pos, int depth,
                     std::uint64_t leaf_guard = kOracleLeafGuard);

// True iff g bounds the minimax value in the stated direction.
bool oracle_check_bound(const GameModel& model, const Position& pos, int depth,
                        Value g, BoundDirection dir,
                        std::uint64_t leaf_guard = kOracleLeafGuard);

}  // namespace mtd
