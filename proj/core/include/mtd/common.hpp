#pragma once

#include <cstdint>

namespace mtd {

// Scores are integers with a grain of 1. Leaf evaluations stay within
// [-kValMax, kValMax]; the infinity sentinels live far outside that range so
// g+1 style arithmetic never touches them.
using Value = int;

inline constexpr Value kValMax = 1 << 20;
inline constexpr Value kInf = 1 << 30;

enum class NodeKind : std::uint8_t { Max, Min };

constexpr NodeKind flip(NodeKind k) {
  return k == NodeKind::Max ? NodeKind::Min : NodeKind::Max;
}

// splitmix64 finalizer. Bijective on 64 bits, so distinct inputs give
// distinct outputs.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic stream generator built on mix64. Same sequence on every
// platform; std::uniform_* distributions are not portable, this is.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // In [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace mtd
