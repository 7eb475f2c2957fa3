#ifndef SHAPEINV_TABLEAU_HPP
#define SHAPEINV_TABLEAU_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace shapeinv {

using Rows = std::vector<std::vector<int>>;

// A Young tableau with distinct positive entries, strictly increasing along
// rows and down columns. Entries need not be 1..n; this is the type row
// insertion works on.
class Tableau {
 public:
  Tableau() = default;

  explicit Tableau(Rows rows) : rows_(std::move(rows)) {
    std::vector<int> all;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      if (row.empty()) throw InvalidArgument("tableau rows must be non-empty");
      if (r > 0 && row.size() > rows_[r - 1].size()) {
        throw InvalidArgument("tableau row lengths must weakly decrease");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] <= 0) throw InvalidArgument("tableau entries must be positive");
        if (c > 0 && row[c] <= row[c - 1]) {
          throw InvalidArgument("tableau rows must strictly increase");
        }
        if (r > 0 && row[c] <= rows_[r - 1][c]) {
          throw InvalidArgument("tableau columns must strictly increase");
        }
        all.push_back(row[c]);
      }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw InvalidArgument("tableau entries must be distinct");
    }
  }

  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};
  Tableau(unchecked_t, Rows rows) noexcept : rows_(std::move(rows)) {}

  [[nodiscard]] const Rows& rows() const noexcept { return rows_; }
  [[nodiscard]] Partition shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
  }
  [[nodiscard]] int size() const noexcept {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
  }
  [[nodiscard]] bool contains(int x) const noexcept {
    for (const auto& row : rows_) {
      if (std::binary_search(row.begin(), row.end(), x)) return true;
    }
    return false;
  }
  // Entries are exactly 1..size().
  [[nodiscard]] bool is_standard() const noexcept {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : rows_) {
      for (int v : row) {
        if (v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
    return true;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Rows rows_;
};

class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  explicit StandardYoungTableau(Rows rows) : t_(std::move(rows)) {
    if (!t_.is_standard()) {
      throw InvalidArgument("standard tableau entries must be exactly 1..n");
    }
  }
  explicit StandardYoungTableau(Tableau t) : t_(std::move(t)) {
    if (!t_.is_standard()) {
      throw InvalidArgument("standard tableau entries must be exactly 1..n");
    }
  }
  StandardYoungTableau(Tableau::unchecked_t, Rows rows) noexcept
      : t_(Tableau::unchecked, std::move(rows)) {}

  [[nodiscard]] const Rows& rows() const noexcept { return t_.rows(); }
  [[nodiscard]] Partition shape() const { return t_.shape(); }
  [[nodiscard]] int size() const noexcept { return t_.size(); }
  [[nodiscard]] const Tableau& tableau() const noexcept { return t_; }

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  Tableau t_;
};

struct RSPair {
  StandardYoungTableau insertion;  // P
  StandardYoungTableau recording;  // Q
  friend bool operator==(const RSPair&, const RSPair&) = default;
};

// 1-indexed (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

namespace detail {

// Schensted row insertion in place. Returns the 0-based row that grew.
inline std::size_t insert_in_place(Rows& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return r;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(*it, x);
  }
}

// Row lengths of the insertion tableau, written into `shape` (must hold n
// slots). `rows` is caller-owned scratch; nothing is allocated after warm-up.
inline int shape_lengths(std::span<const int> entries, Rows& rows, std::span<int> shape) {
  for (auto& row : rows) row.clear();
  std::size_t used = 0;
  for (int x : entries) {
    for (std::size_t r = 0;; ++r) {
      if (r == used) {
        if (rows.size() == used) rows.emplace_back();
        rows[r].push_back(x);
        ++used;
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  for (std::size_t r = 0; r < used; ++r) shape[r] = static_cast<int>(rows[r].size());
  return static_cast<int>(used);
}

}  // namespace detail

struct InsertResult {
  Tableau tableau;
  Cell cell;
};

// T ← x. The bumped entry of each row is the smallest entry larger than the
// incoming one; a row with no larger entry receives it at the end.
inline InsertResult row_insert(const Tableau& t, int x) {
  if (x <= 0) throw InvalidArgument("row_insert: entry must be positive");
  if (t.contains(x)) {
    throw InvalidArgument("row_insert: " + std::to_string(x) + " is already in the tableau");
  }
  Rows rows = t.rows();
  const auto r = detail::insert_in_place(rows, x);
  const Cell cell{static_cast<int>(r) + 1, static_cast<int>(rows[r].size())};
  return {Tableau(Tableau::unchecked, std::move(rows)), cell};
}

inline RSPair rs(const Permutation& p) {
  Rows P;
  Rows Q;
  int step = 0;
  for (int x : p.entries()) {
    ++step;
    const auto r = detail::insert_in_place(P, x);
    if (r == Q.size()) Q.emplace_back();
    Q[r].push_back(step);
  }
  return {StandardYoungTableau(Tableau::unchecked, std::move(P)),
          StandardYoungTableau(Tableau::unchecked, std::move(Q))};
}

// Reverse bumping: remove the cell holding n, n-1, … from Q and bump the
// matching P entry back up to the first row.
inline Permutation rs_inverse(const RSPair& pair) {
  const auto& P = pair.insertion;
  const auto& Q = pair.recording;
  if (!(P.shape() == Q.shape())) {
    throw InvalidArgument("rs_inverse: insertion and recording shapes differ");
  }
  const int n = P.size();
  std::vector<std::pair<std::size_t, std::size_t>> cell_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < Q.rows().size(); ++r) {
    for (std::size_t c = 0; c < Q.rows()[r].size(); ++c) {
      cell_of[static_cast<std::size_t>(Q.rows()[r][c])] = {r, c};
    }
  }
  Rows rows = P.rows();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    const auto [r, c] = cell_of[static_cast<std::size_t>(k)];
    if (c + 1 != rows[r].size() || (r + 1 < rows.size() && rows[r + 1].size() > c)) {
      throw InvalidArgument("rs_inverse: recording tableau is not standard");
    }
    int y = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (std::size_t up = r; up-- > 0;) {
      auto& row = rows[up];
      // Largest entry smaller than y.
      auto it = std::lower_bound(row.begin(), row.end(), y);
      --it;
      std::swap(*it, y);
    }
    out[static_cast<std::size_t>(k - 1)] = y;
  }
  return Permutation(std::move(out));
}

inline Partition shape_of(const Permutation& p) {
  Rows scratch;
  std::vector<int> lengths(static_cast<std::size_t>(p.size()));
  const int used = detail::shape_lengths(p.entries(), scratch, lengths);
  lengths.resize(static_cast<std::size_t>(used));
  return Partition(std::move(lengths));
}

// Number of standard Young tableaux of shape λ, by removing corners
// recursively (no hook-length formula).
inline BigInt count_syt(const Partition& shape) {
  std::map<std::vector<int>, BigInt> memo;
  auto rec = [&memo](auto&& self, std::vector<int> parts) -> BigInt {
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const bool corner = (i + 1 == parts.size()) || parts[i + 1] < parts[i];
      if (!corner) continue;
      auto smaller = parts;
      if (--smaller[i] == 0) smaller.pop_back();
      total += self(self, std::move(smaller));
    }
    memo.emplace(std::move(parts), total);
    return total;
  };
  return rec(rec, shape.vec());
}

}  // namespace shapeinv

#endif  // SHAPEINV_TABLEAU_HPP
