#ifndef SHAPEINV_PERMUTATION_HPP
#define SHAPEINV_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace shapeinv {

// A permutation of [n] in one-line notation. Positions and values are
// 1-indexed in every public accessor; storage is 0-based.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw InvalidArgument("permutation entry " + std::to_string(v) +
                              " is outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("permutation entry " + std::to_string(v) + " is repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(unchecked, std::move(e));
  }

  static Permutation reverse(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.rbegin(), e.rend(), 1);
    return Permutation(unchecked, std::move(e));
  }

  // For callers that construct bijections by construction (hot loops,
  // transposition actions). No validation.
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};
  Permutation(unchecked_t, std::vector<int> entries) noexcept
      : entries_(std::move(entries)) {}

  [[nodiscard]] int size() const noexcept { return static_cast<int>(entries_.size()); }
  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  [[nodiscard]] const std::vector<int>& vec() const noexcept { return entries_; }

  // π_pos, 1-indexed.
  [[nodiscard]] int at(int pos) const {
    return entries_.at(static_cast<std::size_t>(pos - 1));
  }
  // Position holding value, 1-indexed. O(n).
  [[nodiscard]] int position_of(int value) const {
    auto it = std::find(entries_.begin(), entries_.end(), value);
    if (it == entries_.end()) throw InvalidArgument("value not in permutation");
    return static_cast<int>(it - entries_.begin()) + 1;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

namespace detail {

// Merge-count over a scratch buffer. `work` is overwritten with the sorted
// values; both spans must have the same length.
inline std::uint64_t merge_count(std::span<int> work, std::span<int> scratch) {
  const std::size_t n = work.size();
  std::uint64_t count = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (work[j] < work[i]) {
          count += mid - i;
          scratch[k++] = work[j++];
        } else {
          scratch[k++] = work[i++];
        }
      }
      while (i < mid) scratch[k++] = work[i++];
      while (j < hi) scratch[k++] = work[j++];
    }
    std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), work.begin());
  }
  return count;
}

// 0-based inverse: inv[v-1] = position (0-based) of value v.
inline std::vector<int> positions(std::span<const int> entries) {
  std::vector<int> pos(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    pos[static_cast<std::size_t>(entries[i] - 1)] = static_cast<int>(i);
  }
  return pos;
}

template <class Compare>
int patience_length(std::span<const int> entries, Compare comp) {
  std::vector<int> tops;
  tops.reserve(entries.size());
  for (int v : entries) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v, comp);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

}  // namespace detail

// #{(i,j) : i < j, π_i > π_j}, by merge counting.
inline std::uint64_t inversions(std::span<const int> entries) {
  std::vector<int> work(entries.begin(), entries.end());
  std::vector<int> scratch(entries.size());
  return detail::merge_count(work, scratch);
}

inline std::uint64_t inversions(const Permutation& p) { return inversions(p.entries()); }

inline Permutation inverse(const Permutation& p) {
  std::vector<int> inv(p.vec().size());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    inv[static_cast<std::size_t>(p.vec()[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(Permutation::unchecked, std::move(inv));
}

// π · s_i: swap the entries at positions i and i+1.
inline Permutation right_transpose(const Permutation& p, int i) {
  if (i < 1 || i >= p.size()) {
    throw InvalidArgument("right_transpose: position " + std::to_string(i) + " out of range");
  }
  auto e = p.vec();
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  return Permutation(Permutation::unchecked, std::move(e));
}

// s_i · π: exchange the positions of the values i and i+1.
inline Permutation left_transpose(const Permutation& p, int i) {
  if (i < 1 || i >= p.size()) {
    throw InvalidArgument("left_transpose: value " + std::to_string(i) + " out of range");
  }
  auto e = p.vec();
  for (int& v : e) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return Permutation(Permutation::unchecked, std::move(e));
}

inline int lis_length(std::span<const int> entries) {
  return detail::patience_length(entries, std::less<int>{});
}
inline int lds_length(std::span<const int> entries) {
  return detail::patience_length(entries, std::greater<int>{});
}
inline int lis_length(const Permutation& p) { return lis_length(p.entries()); }
inline int lds_length(const Permutation& p) { return lds_length(p.entries()); }

// A longest decreasing subsequence whose first (highest) point has the
// smallest possible position. The rest is completed greedily: each next point
// is the leftmost one that still extends to a maximal LDS. Returns 1-indexed
// positions, increasing.
inline std::vector<int> leftmost_lds(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) return {};
  // down[i]: length of the longest decreasing subsequence starting at i.
  std::vector<int> down(static_cast<std::size_t>(n), 1);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (entries[static_cast<std::size_t>(j)] < entries[static_cast<std::size_t>(i)]) {
        down[static_cast<std::size_t>(i)] =
            std::max(down[static_cast<std::size_t>(i)], down[static_cast<std::size_t>(j)] + 1);
      }
    }
  }
  const int best = *std::max_element(down.begin(), down.end());
  int cur = static_cast<int>(std::find(down.begin(), down.end(), best) - down.begin());
  std::vector<int> out{cur + 1};
  while (down[static_cast<std::size_t>(cur)] > 1) {
    const int need = down[static_cast<std::size_t>(cur)] - 1;
    int next = cur + 1;
    while (!(entries[static_cast<std::size_t>(next)] < entries[static_cast<std::size_t>(cur)] &&
             down[static_cast<std::size_t>(next)] == need)) {
      ++next;
    }
    cur = next;
    out.push_back(cur + 1);
  }
  return out;
}

inline std::vector<int> leftmost_lds(const Permutation& p) { return leftmost_lds(p.entries()); }

}  // namespace shapeinv

template <>
struct std::hash<shapeinv::Permutation> {
  std::size_t operator()(const shapeinv::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.entries()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

#endif  // SHAPEINV_PERMUTATION_HPP
