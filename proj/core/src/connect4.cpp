#include "mtd/connect4.hpp"

#include <stdexcept>

namespace mtd {
namespace {

constexpr int kCells = Connect4Model::kWidth * Connect4Model::kHeight;
constexpr int kMaxPly = kCells;

// Center-first column order prunes better on average.
constexpr int kColumnOrder[Connect4Model::kWidth] = {2, 1, 3, 0, 4};

constexpr int bit_index(int col, int row) {
  return col * Connect4Model::kStride + row;
}

// All 4-in-a-row line masks on the 5x4 board.
std::vector<std::uint64_t> make_lines() {
  std::vector<std::uint64_t> lines;
  auto add = [&](int c0, int r0, int dc, int dr) {
    std::uint64_t m = 0;
    for (int i = 0; i < 4; ++i) m |= std::uint64_t{1} << bit_index(c0 + i * dc, r0 + i * dr);
    lines.push_back(m);
  };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c + 3 < 5; ++c) add(c, r, 1, 0);  // horizontal
  for (int c = 0; c < 5; ++c) add(c, 0, 0, 1);        // vertical
  for (int c = 0; c + 3 < 5; ++c) add(c, 0, 1, 1);    // diagonal up
  for (int c = 0; c + 3 < 5; ++c) add(c, 3, 1, -1);   // diagonal down
  return lines;
}

const std::vector<std::uint64_t>& lines() {
  static const std::vector<std::uint64_t> v = make_lines();
  return v;
}

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace

Connect4Model::Connect4Model() {
  Rng rng(0xC0443C7ULL);
  for (auto& cell : cell_codes_)
    for (auto& code : cell) code = rng.next();
  side_code_ = rng.next();
}

bool Connect4Model::has_win(std::uint64_t mask) {
  for (const int s : {1, kStride, kStride + 1, kStride - 1}) {
    const std::uint64_t m = mask & (mask >> s);
    if (m & (m >> (2 * s))) return true;
  }
  return false;
}

Position Connect4Model::root() const {
  Position p;
  p.kind = NodeKind::Max;
  return p;
}

bool Connect4Model::is_terminal(const Position& pos) const {
  return pos.ply >= kMaxPly || has_win(stones(pos, 0)) || has_win(stones(pos, 1));
}

bool Connect4Model::column_full(const Position& pos, int column) const {
  const std::uint64_t both = pos.state[0] | pos.state[1];
  return both & (std::uint64_t{1} << bit_index(column, kHeight - 1));
}

Position Connect4Model::apply(const Position& pos, int column) const {
  const std::uint64_t both = pos.state[0] | pos.state[1];
  int row = 0;
  while (row < kHeight && (both & (std::uint64_t{1} << bit_index(column, row))))
    ++row;
  if (row == kHeight) throw std::logic_error("connect4: column is full");

  const int player = pos.kind == NodeKind::Max ? 0 : 1;
  Position next = pos;
  next.state[player] |= std::uint64_t{1} << bit_index(column, row);
  next.kind = flip(pos.kind);
  next.ply = pos.ply + 1;
  next.key = pos.key ^ cell_codes_[column * kHeight + row][player] ^ side_code_;
  return next;
}

std::vector<Child> Connect4Model::children(const Position& pos) const {
  if (is_terminal(pos))
    throw std::logic_error("connect4: children() on a terminal position");
  std::vector<Child> kids;
  kids.reserve(kWidth);
  for (const int col : kColumnOrder)
    if (!column_full(pos, col)) kids.push_back({col, apply(pos, col)});
  return kids;
}

Value Connect4Model::evaluate(const Position& pos) const {
  if (has_win(stones(pos, 0))) return kValMax - pos.ply;
  if (has_win(stones(pos, 1))) return -(kValMax - pos.ply);
  if (pos.ply >= kMaxPly) return 0;

  // Open-line count, weighted by stones already in the line.
  static constexpr Value weight[4] = {0, 1, 4, 16};
  Value score = 0;
  for (const std::uint64_t line : lines()) {
    const int c0 = popcount(stones(pos, 0) & line);
    const int c1 = popcount(stones(pos, 1) & line);
    if (c1 == 0) score += weight[c0];
    if (c0 == 0) score -= weight[c1];
  }
  return score;
}

std::uint64_t Connect4Model::recompute_key(const Position& pos) const {
  std::uint64_t key = pos.kind == NodeKind::Min ? side_code_ : 0;
  for (int col = 0; col < kWidth; ++col)
    for (int row = 0; row < kHeight; ++row)
      for (int player = 0; player < 2; ++player)
        if (pos.state[player] & (std::uint64_t{1} << bit_index(col, row)))
          key ^= cell_codes_[col * kHeight + row][player];
  return key;
}

Position Connect4Model::after_moves(std::initializer_list<int> columns) const {
  Position p = root();
  for (const int col : columns) p = apply(p, col);
  return p;
}

}  // namespace mtd
