#ifndef SHAPEINV_MINIMAL_HPP
#define SHAPEINV_MINIMAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace shapeinv {

// Block lengths (c_1, …, c_M) of a layered permutation, a rearrangement of
// the column lengths of its shape. prefix(j) = c_1 + … + c_j, prefix(0) = 0.
class BlockComposition {
 public:
  BlockComposition() = default;

  explicit BlockComposition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    prefix_.reserve(blocks_.size() + 1);
    for (int b : blocks_) {
      if (b <= 0) throw InvalidArgument("block lengths must be positive");
      prefix_.push_back(prefix_.back() + b);
    }
  }

  BlockComposition(std::initializer_list<int> blocks)
      : BlockComposition(std::vector<int>(blocks)) {}

  [[nodiscard]] std::span<const int> blocks() const noexcept { return blocks_; }
  [[nodiscard]] const std::vector<int>& vec() const noexcept { return blocks_; }
  // M
  [[nodiscard]] int count() const noexcept { return static_cast<int>(blocks_.size()); }
  // c_i, 1-indexed.
  [[nodiscard]] int block(int i) const { return blocks_.at(static_cast<std::size_t>(i - 1)); }
  // c*_j, 0 ≤ j ≤ M.
  [[nodiscard]] int prefix(int j) const { return prefix_.at(static_cast<std::size_t>(j)); }
  [[nodiscard]] int size() const noexcept { return prefix_.empty() ? 0 : prefix_.back(); }

  // The shape λ whose conjugate has these blocks as parts.
  [[nodiscard]] Partition shape() const {
    auto cols = blocks_;
    std::sort(cols.rbegin(), cols.rend());
    return conjugate(Partition(std::move(cols)));
  }

  friend auto operator<=>(const BlockComposition& a, const BlockComposition& b) {
    return a.blocks_ <=> b.blocks_;
  }
  friend bool operator==(const BlockComposition& a, const BlockComposition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> prefix_{0};
};

struct MinimalPermutation {
  BlockComposition composition;
  Permutation permutation;
};

// Block j sits at positions c*_{j-1}+1 .. c*_j and holds the same values in
// decreasing order.
inline Permutation minimal_from_composition(const BlockComposition& c) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(c.size()));
  for (int j = 1; j <= c.count(); ++j) {
    for (int v = c.prefix(j); v > c.prefix(j - 1); --v) e.push_back(v);
  }
  return Permutation(Permutation::unchecked, std::move(e));
}

// One minimal permutation per distinct rearrangement of λ′, in lexicographic
// order of the block sequence.
inline std::vector<MinimalPermutation> all_minimal(const Partition& shape) {
  if (shape.empty()) throw InvalidArgument("all_minimal: shape must be non-empty");
  auto blocks = conjugate(shape).vec();
  std::sort(blocks.begin(), blocks.end());
  std::vector<MinimalPermutation> out;
  do {
    BlockComposition c(blocks);
    out.push_back({c, minimal_from_composition(c)});
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  return out;
}

// Σ_i binom(λ′_i, 2).
inline std::uint64_t min_inversions(const Partition& shape) {
  std::uint64_t total = 0;
  const auto cols = conjugate(shape);
  for (int col : cols.parts()) {
    total += static_cast<std::uint64_t>(col) * static_cast<std::uint64_t>(col - 1) / 2;
  }
  return total;
}

// The block composition of p if p is layered, nullopt otherwise.
inline std::optional<BlockComposition> is_minimal(const Permutation& p) {
  const auto e = p.entries();
  std::vector<int> blocks;
  int done = 0;  // largest value placed so far = c*_{j-1}
  std::size_t i = 0;
  while (i < e.size()) {
    const int top = e[i];
    const int len = top - done;
    if (len <= 0 || i + static_cast<std::size_t>(len) > e.size()) return std::nullopt;
    for (int k = 0; k < len; ++k) {
      if (e[i + static_cast<std::size_t>(k)] != top - k) return std::nullopt;
    }
    blocks.push_back(len);
    done = top;
    i += static_cast<std::size_t>(len);
  }
  return BlockComposition(std::move(blocks));
}

}  // namespace shapeinv

#endif  // SHAPEINV_MINIMAL_HPP
