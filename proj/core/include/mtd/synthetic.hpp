#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "mtd/game.hpp"

namespace mtd {

// Deterministic random game tree. Identical specs yield bit-identical trees
// across runs and platforms.
struct SyntheticTreeSpec {
  int branching = 2;
  int depth = 2;
  std::uint64_t seed = 0;
  int value_span = 100;  // leaf values drawn from [-value_span, value_span]
  // Probability knob for move ordering: 1 sorts children best-first,
  // 0.5 shuffles uniformly, 0 sorts worst-first.
  double ordering_quality = 0.5;
  // Added to every evaluation at odd plies; makes iteration values oscillate
  // with search-depth parity.
  int parity_offset = 0;

  // key=value lines, one per field.
  std::string to_config() const;
  static SyntheticTreeSpec from_config(const std::string& text);
};

class SyntheticModel final : public GameModel {
 public:
  explicit SyntheticModel(const SyntheticTreeSpec& spec);

  Position root() const override;
  bool is_terminal(const Position& pos) const override;
  std::vector<Child> children(const Position& pos) const override;
  Value evaluate(const Position& pos) const override;

  const SyntheticTreeSpec& spec() const { return spec_; }

 private:
  std::uint64_t path_code(const Position& pos) const { return pos.state[0]; }
  Position make_node(std::uint64_t code, int ply) const;
  Value leaf_value(std::uint64_t code, int ply) const;
  std::vector<std::uint8_t> shuffled_order(std::uint64_t code) const;
  Value build_ordering(std::uint64_t code, int ply);

  SyntheticTreeSpec spec_;
  std::uint64_t value_salt_;
  std::uint64_t order_salt_;
  // Child permutation per internal node, precomputed when ordering is biased
  // (needs subtree values); empty for ordering_quality == 0.5.
  std::unordered_map<std::uint64_t, std::vector<std::uint8_t>> order_;
};

}  // namespace mtd
