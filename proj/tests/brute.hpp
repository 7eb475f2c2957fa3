// Slow, independent reference implementations used only by the tests. None of
// these call into the library's algorithms.
#ifndef SHAPEINV_TESTS_BRUTE_HPP
#define SHAPEINV_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using Vec = std::vector<int>;

inline std::vector<Vec> all_perms(int n) {
  Vec p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Vec> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <class F>
void for_each_perm(int n, F&& f) {
  Vec p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do f(p);
  while (std::next_permutation(p.begin(), p.end()));
}

inline std::uint64_t inversions(const Vec& p) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

inline bool increasing(const Vec& p, std::uint32_t mask) {
  int last = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (p[i] < last) return false;
    last = p[i];
  }
  return true;
}

inline bool decreasing(const Vec& p, std::uint32_t mask) {
  int last = 1 << 30;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (p[i] > last) return false;
    last = p[i];
  }
  return true;
}

// Longest monotone subsequences by checking every subset.
inline int lis(const Vec& p) {
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << p.size()); ++m)
    if (increasing(p, m)) best = std::max(best, std::popcount(m));
  return best;
}

inline int lds(const Vec& p) {
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << p.size()); ++m)
    if (decreasing(p, m)) best = std::max(best, std::popcount(m));
  return best;
}

// All decreasing subsequences of maximal length, as 1-indexed position lists.
inline std::vector<Vec> all_max_lds(const Vec& p) {
  const int best = lds(p);
  std::vector<Vec> out;
  for (std::uint32_t m = 0; m < (1U << p.size()); ++m) {
    if (std::popcount(m) != best || !decreasing(p, m)) continue;
    Vec pos;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (m >> i & 1U) pos.push_back(static_cast<int>(i) + 1);
    out.push_back(pos);
  }
  return out;
}

// Shape by Greene's theorem: λ_1 + … + λ_k is the largest subset whose
// longest decreasing subsequence is at most k.
inline Vec greene_shape(const Vec& p) {
  const auto n = p.size();
  std::vector<int> best(n + 1, 0);
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    Vec sub;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1U) sub.push_back(p[i]);
    const int d = lds(sub);
    for (int k = std::max(d, 1); k <= static_cast<int>(n); ++k)
      best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k)], std::popcount(m));
  }
  Vec shape;
  for (std::size_t k = 1; k <= n; ++k) {
    const int part = best[k] - best[k - 1];
    if (part > 0) shape.push_back(part);
  }
  return shape;
}

// Integer partitions of n by recursion on the largest part; any order.
inline std::vector<Vec> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {Vec{}};
  std::vector<Vec> out;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

// c-colored partitions of n: c-tuples of ordinary partitions with sizes
// summing to n.
inline std::uint64_t colored(int c, int n) {
  if (c == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (int first = 0; first <= n; ++first)
    total += partitions(first).size() * colored(c - 1, n - first);
  return total;
}

inline Vec conjugate(const Vec& p) {
  Vec out;
  for (int i = 1; !p.empty() && i <= p.front(); ++i)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [i](int x) { return x >= i; })));
  return out;
}

// Standard Young tableaux of a shape by trying every filling.
inline std::uint64_t syt_count(const Vec& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::uint64_t count = 0;
  for_each_perm(n, [&](const Vec& fill) {
    std::vector<Vec> rows;
    std::size_t k = 0;
    for (int len : shape) {
      rows.emplace_back(fill.begin() + static_cast<std::ptrdiff_t>(k),
                        fill.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(len)));
      k += static_cast<std::size_t>(len);
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0 && rows[r][c] < rows[r][c - 1]) return;
        if (r > 0 && rows[r][c] < rows[r - 1][c]) return;
      }
    ++count;
  });
  return count;
}

// Distinct orderings of a multiset.
inline std::uint64_t distinct_orderings(Vec items) {
  std::sort(items.begin(), items.end());
  std::uint64_t c = 0;
  do ++c;
  while (std::next_permutation(items.begin(), items.end()));
  return c;
}

// Layered: consecutive decreasing runs of consecutive values, runs ascending.
inline bool layered(const Vec& p) {
  std::size_t i = 0;
  int below = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j + 1 < p.size() && p[j + 1] == p[j] - 1) ++j;
    if (p[j] != below + 1) return false;
    below = p[i];
    i = j + 1;
  }
  return true;
}

inline Vec inverse(const Vec& p) {
  Vec q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

}  // namespace brute

#endif  // SHAPEINV_TESTS_BRUTE_HPP
