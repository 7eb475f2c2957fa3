#ifndef SHAPEINV_DECOMPOSE_HPP
#define SHAPEINV_DECOMPOSE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "jump.hpp"
#include "minimal.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace shapeinv {

// Shape statistics of a permutation whose shape has exactly two columns,
// λ′ = (s, r) with s ≥ r.
struct TwoColumnProfile {
  int s = 0;
  int r = 0;
  std::uint64_t min_inversions = 0;
  std::uint64_t delta = 0;
};

// Throws RegimeError unless sh(σ) has exactly two columns.
inline TwoColumnProfile two_column_profile(const Permutation& sigma) {
  const auto cols = conjugate(shape_of(sigma));
  if (cols.length() != 2) {
    throw RegimeError("shape has " + std::to_string(cols.length()) +
                      " columns; the two-column results need exactly two");
  }
  TwoColumnProfile out;
  out.s = cols[0];
  out.r = cols[1];
  out.min_inversions = min_inversions(conjugate(cols));
  out.delta = inversions(sigma) - out.min_inversions;
  return out;
}

// Regions cut out by the bounding box of an LDS S:
//
//        d | g | h        top
//        --+---+--
//        b | a | j
//        --+---+--
//        c | f | e        bottom
//      left  mid  right
enum class Region { a, b, c, d, e, f, g, h, j };

inline std::string_view to_string(Region r) {
  constexpr std::string_view names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "j"};
  return names[static_cast<int>(r)];
}

struct LdsFrame {
  std::vector<int> lds;  // 1-indexed positions of S
  int left = 0;          // position of the first S point
  int right = 0;         // position of the last S point
  int top = 0;           // value of the first S point
  int bottom = 0;        // value of the last S point

  [[nodiscard]] Region classify(int pos, int value) const {
    const int col = pos < left ? 0 : (pos > right ? 2 : 1);
    const int row = value > top ? 0 : (value < bottom ? 2 : 1);
    constexpr Region grid[3][3] = {{Region::d, Region::g, Region::h},
                                   {Region::b, Region::a, Region::j},
                                   {Region::c, Region::f, Region::e}};
    return grid[row][col];
  }
};

inline LdsFrame lds_frame(const Permutation& sigma) {
  LdsFrame f;
  f.lds = leftmost_lds(sigma);
  if (f.lds.empty()) return f;
  f.left = f.lds.front();
  f.right = f.lds.back();
  f.top = sigma.at(f.left);
  f.bottom = sigma.at(f.right);
  return f;
}

enum class ComplementSide { lower_left, upper_right, mixed };

// Where the points outside the leftmost LDS sit: all in {b, c, f}
// (lower_left), all in {g, h, j} (upper_right), or anything else.
struct ComplementLayout {
  LdsFrame frame;
  std::vector<int> positions;  // 1-indexed, increasing
  std::vector<Region> regions;
  ComplementSide side = ComplementSide::mixed;
  bool decreasing = true;
};

inline ComplementLayout complement_layout(const Permutation& sigma) {
  ComplementLayout out;
  out.frame = lds_frame(sigma);
  std::vector<bool> in_s(static_cast<std::size_t>(sigma.size()) + 1, false);
  for (int p : out.frame.lds) in_s[static_cast<std::size_t>(p)] = true;
  bool lower = true;
  bool upper = true;
  int prev = sigma.size() + 1;
  for (int p = 1; p <= sigma.size(); ++p) {
    if (in_s[static_cast<std::size_t>(p)]) continue;
    const int v = sigma.at(p);
    const Region reg = out.frame.classify(p, v);
    out.positions.push_back(p);
    out.regions.push_back(reg);
    lower = lower && (reg == Region::b || reg == Region::c || reg == Region::f);
    upper = upper && (reg == Region::g || reg == Region::h || reg == Region::j);
    if (v > prev) out.decreasing = false;
    prev = v;
  }
  if (out.positions.empty()) {
    out.side = ComplementSide::mixed;
  } else if (lower) {
    out.side = ComplementSide::lower_left;
  } else if (upper) {
    out.side = ComplementSide::upper_right;
  }
  return out;
}

struct Decomposition {
  Permutation minimal;
  JumpPartition jumps;
};

namespace detail {

// Mutable point set for peeling jumps off σ: values by position, positions by
// value, and membership in the LDS.
struct PeelState {
  std::vector<int> value;  // 0-based position -> value
  std::vector<int> pos;    // value-1 -> 0-based position
  std::vector<bool> in_s;  // 0-based position

  void swap_values(int v) {  // values v and v+1 trade places
    auto& a = pos[static_cast<std::size_t>(v - 1)];
    auto& b = pos[static_cast<std::size_t>(v)];
    std::swap(value[static_cast<std::size_t>(a)], value[static_cast<std::size_t>(b)]);
    std::swap(a, b);
  }
  void swap_positions(std::size_t p) {  // entries p and p+1 trade places
    std::swap(value[p], value[p + 1]);
    std::swap(pos[static_cast<std::size_t>(value[p] - 1)],
              pos[static_cast<std::size_t>(value[p + 1] - 1)]);
    const bool tmp = in_s[p];
    in_s[p] = in_s[p + 1];
    in_s[p + 1] = tmp;
  }
  [[nodiscard]] bool value_in_s(int v) const {
    return in_s[static_cast<std::size_t>(pos[static_cast<std::size_t>(v - 1)])];
  }
};

inline Partition rows_to_partition(std::vector<int> rows, std::string_view what) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] > rows[i - 1] || rows[i] == 0) {
      throw InternalError("decompose: peeled " + std::string(what) +
                          " jump counts do not form a partition");
    }
  }
  return Partition(std::move(rows));
}

// Moves the point at p0 down in value past `steps` points of the given
// membership, one adjacent value at a time.
inline void lower_value(PeelState& st, std::size_t p0, int steps, bool partner_in_s) {
  for (int k = 0; k < steps; ++k) {
    const int w = st.value[p0];
    if (w <= 1 || st.value_in_s(w - 1) != partner_in_s) {
      throw InternalError("decompose: outer peel met a point from the wrong side");
    }
    st.swap_values(w - 1);
  }
}

// Moves the point at p0 left past `steps` points of the given membership.
inline std::size_t move_left(PeelState& st, std::size_t p0, int steps, bool partner_in_s) {
  for (int k = 0; k < steps; ++k) {
    if (p0 == 0 || st.in_s[p0 - 1] != partner_in_s) {
      throw InternalError("decompose: inner peel met a point from the wrong side");
    }
    st.swap_positions(p0 - 1);
    --p0;
  }
  return p0;
}

}  // namespace detail

// Writes σ in W_λ^Δ (λ′ = (s, r), Δ < r) as J(π). The points outside the
// leftmost LDS either all sit in {b, c, f} or all in {g, h, j}.
//
// {b, c, f}: π = (r, …, 1 | n, …, r+1). Each b point, lowest first, is
// lowered past the S points below it (undoing outer jumps); each f point,
// leftmost first, is moved left past the S points before it (undoing inner
// jumps).
// {g, h, j}: π = (s, …, 1 | n, …, s+1). The roles flip: S points are moved
// left past the g points before them (inner) and, lowest first, lowered past
// the j points below them (outer).
//
// The result is re-applied and compared with σ; a mismatch is an
// InternalError.
inline Decomposition decompose_two_column(const Permutation& sigma) {
  const auto prof = two_column_profile(sigma);
  if (prof.delta >= static_cast<std::uint64_t>(prof.r)) {
    throw RegimeError("Δ ≥ r: no decomposition theorem applies (Δ = " +
                      std::to_string(prof.delta) + ", r = " + std::to_string(prof.r) + ")");
  }
  const auto layout = complement_layout(sigma);
  if (!layout.decreasing || layout.side == ComplementSide::mixed) {
    throw InternalError("decompose: points outside the leftmost LDS are not confined to one side");
  }
  const int n = sigma.size();
  detail::PeelState st;
  st.value = sigma.vec();
  st.pos = detail::positions(sigma.entries());
  st.in_s.assign(static_cast<std::size_t>(n), false);
  for (int p : layout.frame.lds) st.in_s[static_cast<std::size_t>(p - 1)] = true;

  std::vector<int> inner_rows;
  std::vector<int> outer_rows;
  BlockComposition composition;

  if (layout.side == ComplementSide::lower_left) {
    composition = BlockComposition{prof.r, prof.s};
    std::vector<std::size_t> b_points;
    std::vector<std::size_t> f_points;
    for (std::size_t i = 0; i < layout.positions.size(); ++i) {
      const auto p = static_cast<std::size_t>(layout.positions[i] - 1);
      if (layout.regions[i] == Region::b) b_points.push_back(p);
      if (layout.regions[i] == Region::f) f_points.push_back(p);
    }
    // b points are the leading positions 1..p; row j of ν belongs to position j.
    outer_rows.assign(b_points.size(), 0);
    for (std::size_t k = b_points.size(); k-- > 0;) {
      const auto p0 = b_points[k];
      if (p0 != k) throw InternalError("decompose: b points are not the leading positions");
      int below = 0;
      for (std::size_t q = 0; q < st.in_s.size(); ++q) {
        if (st.in_s[q] && st.value[q] < st.value[p0]) ++below;
      }
      detail::lower_value(st, p0, below, true);
      outer_rows[k] = below;
    }
    // Rightmost f point is row 1 of μ.
    for (const auto p0 : f_points) {
      int before = 0;
      for (std::size_t q = 0; q < p0; ++q) before += st.in_s[q] ? 1 : 0;
      detail::move_left(st, p0, before, true);
      inner_rows.insert(inner_rows.begin(), before);
    }
  } else {
    composition = BlockComposition{prof.s, prof.r};
    // S points left to right; the last S point is row 1 of μ.
    std::vector<int> moved;
    for (std::size_t p0 = 0; p0 < st.in_s.size(); ++p0) {
      if (!st.in_s[p0]) continue;
      int before = 0;
      for (std::size_t q = 0; q < p0; ++q) before += st.in_s[q] ? 0 : 1;
      const auto landed = detail::move_left(st, p0, before, false);
      moved.push_back(before);
      p0 = landed;
    }
    inner_rows.assign(moved.rbegin(), moved.rend());
    // S points now fill positions 1..s; row j of ν belongs to position j.
    outer_rows.assign(static_cast<std::size_t>(prof.s), 0);
    for (std::size_t k = static_cast<std::size_t>(prof.s); k-- > 0;) {
      if (!st.in_s[k]) throw InternalError("decompose: S points do not fill the first block");
      int below = 0;
      for (std::size_t q = 0; q < st.in_s.size(); ++q) {
        if (!st.in_s[q] && st.value[q] < st.value[k]) ++below;
      }
      detail::lower_value(st, k, below, false);
      outer_rows[k] = below;
    }
  }

  Permutation minimal = minimal_from_composition(composition);
  if (st.value != minimal.vec()) {
    throw InternalError("decompose: peeling did not reach the minimal permutation");
  }
  auto mu = detail::rows_to_partition(std::move(inner_rows), "inner");
  auto nu = detail::rows_to_partition(std::move(outer_rows), "outer");
  JumpPartition jumps;
  try {
    jumps = JumpPartition(InnerJumpPartition(composition, {std::move(mu)}),
                          OuterJumpPartition(composition, {std::move(nu)}));
  } catch (const InvalidArgument& e) {
    throw InternalError(std::string("decompose: peeled jumps violate constraints: ") + e.what());
  }
  if (static_cast<std::uint64_t>(jumps.size()) != prof.delta || !(apply(jumps, minimal) == sigma)) {
    throw InternalError("decompose: re-applying the decomposition does not give back σ");
  }
  return {std::move(minimal), std::move(jumps)};
}

namespace detail {

// Some window of `len` consecutive positions starting in [first, last]
// satisfies σ_t = base - t throughout.
inline bool has_fixed_run(const Permutation& sigma, int first, int last, int len, int base) {
  for (int start = first; start <= last; ++start) {
    if (start + len - 1 > sigma.size()) break;
    bool ok = true;
    for (int t = start; t < start + len && ok; ++t) ok = sigma.at(t) == base - t;
    if (ok) return true;
  }
  return false;
}

// First block of length a, second of length b.
inline bool fixed_blocks(const Permutation& sigma, int a, int b, int delta) {
  return has_fixed_run(sigma, 1, delta + 1, a - delta, a + 1) &&
         has_fixed_run(sigma, a + 1, a + delta + 1, b - delta, 2 * a + b + 1);
}

}  // namespace detail

// For λ′ = (s, r) and Δ < r, σ keeps s-Δ entries of its first block and
// r-Δ of its second in place (blocks of lengths s then r), or the mirrored
// statement with the block lengths r then s.
inline bool fixed_block_check(const Permutation& sigma) {
  const auto prof = two_column_profile(sigma);
  if (prof.delta >= static_cast<std::uint64_t>(prof.r)) {
    throw RegimeError("fixed_block_check needs Δ < r (Δ = " + std::to_string(prof.delta) +
                      ", r = " + std::to_string(prof.r) + ")");
  }
  const int d = static_cast<int>(prof.delta);
  return detail::fixed_blocks(sigma, prof.s, prof.r, d) ||
         detail::fixed_blocks(sigma, prof.r, prof.s, d);
}

}  // namespace shapeinv

#endif  // SHAPEINV_DECOMPOSE_HPP
