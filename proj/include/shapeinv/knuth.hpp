#ifndef SHAPEINV_KNUTH_HPP
#define SHAPEINV_KNUTH_HPP

#include <compare>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace shapeinv {

// K moves act on three adjacent positions (right action); KD moves are the
// same transformations on the inverse, so they act on three values (left
// action). Plus kinds add one inversion, minus kinds remove one.
//
//   K+   …acb… → …cab…    …bac… → …bca…        (a < b < c)
//   K-   …cab… → …acb…    …bca… → …bac…
//   KD+  a…(a-1)…(a+1) → (a+1)…(a-1)…a     a…(a+2)…(a+1) → (a+1)…(a+2)…a
//   KD-  (a+1)…(a-1)…a → a…(a-1)…(a+1)     (a+1)…(a+2)…a → a…(a+2)…(a+1)
enum class KnuthKind { k_plus, k_minus, kd_plus, kd_minus };

inline std::string_view to_string(KnuthKind kind) {
  switch (kind) {
    case KnuthKind::k_plus: return "K+";
    case KnuthKind::k_minus: return "K-";
    case KnuthKind::kd_plus: return "KD+";
    case KnuthKind::kd_minus: return "KD-";
  }
  return "?";
}

// K moves are anchored by the 1-indexed start of the window; KD moves by the
// value a of the patterns above. Both KD patterns for one anchor swap the
// values a and a+1, so (kind, anchor) pins the result.
struct KnuthMove {
  KnuthKind kind = KnuthKind::k_plus;
  int anchor = 0;
  friend auto operator<=>(const KnuthMove&, const KnuthMove&) = default;
  friend bool operator==(const KnuthMove&, const KnuthMove&) = default;
};

namespace detail {

enum class WindowSwap { none, first_pair, second_pair };

// Which adjacent pair a K move of `kind` swaps in the window (x, y, z).
inline WindowSwap k_window_action(KnuthKind kind, int x, int y, int z) {
  if (kind == KnuthKind::k_plus) {
    if (x < z && z < y) return WindowSwap::first_pair;   // acb -> cab
    if (y < x && x < z) return WindowSwap::second_pair;  // bac -> bca
  } else if (kind == KnuthKind::k_minus) {
    if (y < z && z < x) return WindowSwap::first_pair;   // cab -> acb
    if (z < x && x < y) return WindowSwap::second_pair;  // bca -> bac
  }
  return WindowSwap::none;
}

// pos is the 0-based inverse array, values 1-indexed.
inline bool kd_applicable(KnuthKind kind, const std::vector<int>& pos, int a) {
  const int n = static_cast<int>(pos.size());
  if (a < 1 || a >= n) return false;
  auto p = [&](int value) { return pos[static_cast<std::size_t>(value - 1)]; };
  if (kind == KnuthKind::kd_plus) {
    if (a >= 2 && p(a) < p(a - 1) && p(a - 1) < p(a + 1)) return true;
    if (a + 2 <= n && p(a) < p(a + 2) && p(a + 2) < p(a + 1)) return true;
  } else if (kind == KnuthKind::kd_minus) {
    if (a >= 2 && p(a + 1) < p(a - 1) && p(a - 1) < p(a)) return true;
    if (a + 2 <= n && p(a + 1) < p(a + 2) && p(a + 2) < p(a)) return true;
  }
  return false;
}

inline bool is_dual(KnuthKind kind) {
  return kind == KnuthKind::kd_plus || kind == KnuthKind::kd_minus;
}

// Applies m if applicable; returns nullopt otherwise.
inline std::optional<std::vector<int>> try_apply(const std::vector<int>& e,
                                                 const KnuthMove& m) {
  const int n = static_cast<int>(e.size());
  if (!is_dual(m.kind)) {
    if (m.anchor < 1 || m.anchor + 2 > n) return std::nullopt;
    const auto i = static_cast<std::size_t>(m.anchor - 1);
    const auto action = k_window_action(m.kind, e[i], e[i + 1], e[i + 2]);
    if (action == WindowSwap::none) return std::nullopt;
    auto out = e;
    if (action == WindowSwap::first_pair) {
      std::swap(out[i], out[i + 1]);
    } else {
      std::swap(out[i + 1], out[i + 2]);
    }
    return out;
  }
  const auto pos = positions(e);
  if (!kd_applicable(m.kind, pos, m.anchor)) return std::nullopt;
  auto out = e;
  std::swap(out[static_cast<std::size_t>(pos[static_cast<std::size_t>(m.anchor - 1)])],
            out[static_cast<std::size_t>(pos[static_cast<std::size_t>(m.anchor)])]);
  return out;
}

inline void append_moves(const std::vector<int>& e, bool include_dual,
                         std::vector<KnuthMove>& out) {
  const int n = static_cast<int>(e.size());
  for (int i = 1; i + 2 <= n; ++i) {
    const auto s = static_cast<std::size_t>(i - 1);
    for (auto kind : {KnuthKind::k_plus, KnuthKind::k_minus}) {
      if (k_window_action(kind, e[s], e[s + 1], e[s + 2]) != WindowSwap::none) {
        out.push_back({kind, i});
      }
    }
  }
  if (!include_dual) return;
  const auto pos = positions(e);
  for (int a = 1; a < n; ++a) {
    for (auto kind : {KnuthKind::kd_plus, KnuthKind::kd_minus}) {
      if (kd_applicable(kind, pos, a)) out.push_back({kind, a});
    }
  }
}

// Closure without a size guard; callers bound the class size themselves.
template <class Visit>
void knuth_closure_visit(const Permutation& start, bool include_dual, Visit&& visit) {
  std::set<std::vector<int>> seen{start.vec()};
  std::deque<std::vector<int>> queue{start.vec()};
  std::vector<KnuthMove> moves;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    moves.clear();
    append_moves(cur, include_dual, moves);
    for (const auto& m : moves) {
      auto next = try_apply(cur, m);
      if (seen.insert(*next).second) queue.push_back(std::move(*next));
    }
    visit(std::as_const(cur));
  }
}

}  // namespace detail

// All applicable moves: K moves by window start, then KD moves by anchor value.
inline std::vector<KnuthMove> available_knuth_moves(const Permutation& p) {
  std::vector<KnuthMove> out;
  detail::append_moves(p.vec(), true, out);
  return out;
}

inline Permutation apply_knuth_move(const Permutation& p, const KnuthMove& m) {
  auto out = detail::try_apply(p.vec(), m);
  if (!out) {
    throw InvalidArgument(std::string("Knuth move ") + std::string(to_string(m.kind)) +
                          " at " + std::to_string(m.anchor) + " is not applicable");
  }
  return Permutation(Permutation::unchecked, std::move(*out));
}

inline constexpr int kKnuthClosureMaxN = 9;

// Everything reachable from p by K moves (and KD moves when include_dual).
// With dual moves this is the full RS shape class of p.
inline std::set<Permutation> knuth_closure(const Permutation& p, bool include_dual) {
  if (p.size() > kKnuthClosureMaxN) {
    throw GuardError("knuth_closure: n = " + std::to_string(p.size()) +
                     " exceeds the exhaustive guard of " + std::to_string(kKnuthClosureMaxN));
  }
  std::set<Permutation> out;
  detail::knuth_closure_visit(p, include_dual, [&](const std::vector<int>& e) {
    out.insert(Permutation(Permutation::unchecked, e));
  });
  return out;
}

}  // namespace shapeinv

#endif  // SHAPEINV_KNUTH_HPP
