#pragma once

#include <cstdint>

namespace mtd {

// Counters behind every efficiency comparison. All monotone non-decreasing
// while a search runs.
struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t leaves_evaluated = 0;
  std::uint64_t tt_probes = 0;
  std::uint64_t tt_hits = 0;        // probes that returned usable bounds
  std::uint64_t tt_cutoffs = 0;     // immediate returns from stored bounds
  std::uint64_t tt_stores = 0;
  std::uint64_t tt_replacements = 0;
  std::uint64_t tt_depth_mismatches = 0;  // key hit, bounds unusable
  std::uint64_t researches = 0;     // NegaScout wide-window re-searches
  std::uint64_t passes = 0;         // filled by the MTD drivers
};

// Thrown by searchers when the configured node budget runs out.
struct BudgetExceeded {};

}  // namespace mtd
