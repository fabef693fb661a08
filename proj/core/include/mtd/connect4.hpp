#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "mtd/game.hpp"

namespace mtd {

// Connect-Four on a 5-wide x 4-tall board, small enough for the brute-force
// oracle to solve fully, with genuine transpositions for the table to hit.
// Max moves first; a win for the side that just moved ends the game.
class Connect4Model final : public GameModel {
 public:
  static constexpr int kWidth = 5;
  static constexpr int kHeight = 4;
  static constexpr int kStride = kHeight + 1;  // one guard bit per column

  Connect4Model();

  Position root() const override;
  bool is_terminal(const Position& pos) const override;
  std::vector<Child> children(const Position& pos) const override;
  Value evaluate(const Position& pos) const override;

  // Position after the listed columns have been played from the start.
  Position after_moves(std::initializer_list<int> columns) const;
  Position apply(const Position& pos, int column) const;
  bool column_full(const Position& pos, int column) const;

  // Full recomputation of the Zobrist key; the incremental key every
  // position carries must always agree with this.
  std::uint64_t recompute_key(const Position& pos) const;

  std::uint64_t side_code() const { return side_code_; }
  std::uint64_t cell_code(int cell, int player) const {
    return cell_codes_[cell][player];
  }

 private:
  static std::uint64_t stones(const Position& pos, int player) {
    return pos.state[player];
  }
  static bool has_win(std::uint64_t mask);

  std::array<std::array<std::uint64_t, 2>, kWidth * kHeight> cell_codes_;
  std::uint64_t side_code_;
};

}  // namespace mtd
