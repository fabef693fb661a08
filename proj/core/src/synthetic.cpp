#include "mtd/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtd {
namespace {

constexpr std::uint64_t kRootCode = 1;

// Internal-node count guard for the eager ordering precompute.
constexpr std::uint64_t kOrderingNodeGuard = std::uint64_t{1} << 25;

}  // namespace

std::string SyntheticTreeSpec::to_config() const {
  std::ostringstream os;
  os << "branching=" << branching << '\n'
     << "depth=" << depth << '\n'
     << "seed=" << seed << '\n'
     << "value_span=" << value_span << '\n'
     << "ordering_quality=" << ordering_quality << '\n'
     << "parity_offset=" << parity_offset << '\n';
  return os.str();
}

SyntheticTreeSpec SyntheticTreeSpec::from_config(const std::string& text) {
  SyntheticTreeSpec spec;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("synthetic spec: expected key=value, got '" +
                                  line + "'");
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "branching")
      spec.branching = std::stoi(val);
    else if (key == "depth")
      spec.depth = std::stoi(val);
    else if (key == "seed")
      spec.seed = std::stoull(val);
    else if (key == "value_span")
      spec.value_span = std::stoi(val);
    else if (key == "ordering_quality")
      spec.ordering_quality = std::stod(val);
    else if (key == "parity_offset")
      spec.parity_offset = std::stoi(val);
    else
      throw std::invalid_argument("synthetic spec: unknown key '" + key + "'");
  }
  return spec;
}

SyntheticModel::SyntheticModel(const SyntheticTreeSpec& spec) : spec_(spec) {
  if (spec.branching < 1) throw std::invalid_argument("synthetic: branching >= 1");
  if (spec.depth < 0) throw std::invalid_argument("synthetic: depth >= 0");
  if (spec.value_span < 0 ||
      spec.value_span + std::abs(spec.parity_offset) > kValMax)
    throw std::invalid_argument("synthetic: values must fit in [-VAL_MAX, VAL_MAX]");
  if (spec.ordering_quality < 0.0 || spec.ordering_quality > 1.0)
    throw std::invalid_argument("synthetic: ordering_quality in [0, 1]");
  // Path codes are digits base branching+1; they must fit in 64 bits.
  long double max_code = 1;
  for (int i = 0; i < spec.depth; ++i) max_code *= spec.branching + 1;
  if (max_code * (spec.branching + 1) >= std::ldexp(1.0L, 63))
    throw std::invalid_argument("synthetic: branching^depth too large for path codes");

  value_salt_ = mix64(spec.seed ^ 0x5eaf5eedULL);
  order_salt_ = mix64(spec.seed ^ 0x07de7ULL);
  if (spec.ordering_quality != 0.5 && spec.depth > 0) build_ordering(kRootCode, 0);
}

Position SyntheticModel::make_node(std::uint64_t code, int ply) const {
  Position p;
  p.state[0] = code;
  p.ply = ply;
  p.kind = (ply % 2 == 0) ? NodeKind::Max : NodeKind::Min;
  p.key = mix64(code ^ value_salt_);
  return p;
}

Position SyntheticModel::root() const { return make_node(kRootCode, 0); }

bool SyntheticModel::is_terminal(const Position& pos) const {
  return pos.ply >= spec_.depth;
}

Value SyntheticModel::leaf_value(std::uint64_t code, int ply) const {
  const std::uint64_t span = 2 * std::uint64_t(spec_.value_span) + 1;
  Value v = Value(mix64(code ^ value_salt_ ^ 0xeba1ULL) % span) - spec_.value_span;
  if (ply % 2 != 0) v += spec_.parity_offset;
  return v;
}

Value SyntheticModel::evaluate(const Position& pos) const {
  return leaf_value(path_code(pos), pos.ply);
}

std::vector<std::uint8_t> SyntheticModel::shuffled_order(std::uint64_t code) const {
  std::vector<std::uint8_t> perm(spec_.branching);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  Rng rng(mix64(code ^ order_salt_));
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

Value SyntheticModel::build_ordering(std::uint64_t code, int ply) {
  if (ply >= spec_.depth) return leaf_value(code, ply);
  if (order_.size() > kOrderingNodeGuard)
    throw std::length_error("synthetic: tree too large to precompute ordering");

  const int b = spec_.branching;
  std::vector<Value> values(b);
  for (int i = 0; i < b; ++i)
    values[i] = build_ordering(code * (b + 1) + (i + 1), ply + 1);

  const double p = 2.0 * spec_.ordering_quality - 1.0;
  Rng rng(mix64(code ^ order_salt_));
  std::vector<std::uint8_t> perm(b);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  if (rng.uniform() < std::abs(p)) {
    // Best-first for the mover when p > 0, worst-first when p < 0.
    const bool best_first = p > 0;
    const bool max_node = ply % 2 == 0;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::uint8_t x, std::uint8_t y) {
                       return (best_first == max_node) ? values[x] > values[y]
                                                       : values[x] < values[y];
                     });
  } else {
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  order_.emplace(code, std::move(perm));

  const bool max_node = ply % 2 == 0;
  return max_node ? *std::max_element(values.begin(), values.end())
                  : *std::min_element(values.begin(), values.end());
}

std::vector<Child> SyntheticModel::children(const Position& pos) const {
  if (is_terminal(pos))
    throw std::logic_error("synthetic: children() on a terminal position");
  const std::uint64_t code = path_code(pos);
  const int b = spec_.branching;

  std::vector<std::uint8_t> lazy;
  const std::vector<std::uint8_t>* perm;
  if (const auto it = order_.find(code); it != order_.end()) {
    perm = &it->second;
  } else {
    lazy = shuffled_order(code);
    perm = &lazy;
  }

  std::vector<Child> kids;
  kids.reserve(b);
  for (const std::uint8_t i : *perm)
    kids.push_back({Move(i), make_node(code * (b + 1) + (i + 1), pos.ply + 1)});
  return kids;
}

}  // namespace mtd
