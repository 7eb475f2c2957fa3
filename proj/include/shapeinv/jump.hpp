#ifndef SHAPEINV_JUMP_HPP
#define SHAPEINV_JUMP_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "minimal.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace shapeinv {

enum class JumpSide { inner, outer };

// One partition per block boundary (M-1 of them) attached to a block
// composition c. Component i (1-indexed) must satisfy ℓ ≤ c_i and first part
// < c_{i+1}; empty components are allowed.
//
// Inner jumps act on positions: for row j of component i the entry at
// position c*_i - j + 1 slides right by that row's length.
// Outer jumps act on values: the value c*_i - j + 1 moves up by the row's
// length. Rows apply top row first, components in increasing i.
template <JumpSide Side>
class JumpSequence {
 public:
  JumpSequence() = default;

  JumpSequence(BlockComposition composition, std::vector<Partition> components)
      : composition_(std::move(composition)), components_(std::move(components)) {
    const int m = composition_.count();
    const auto expected = static_cast<std::size_t>(m > 0 ? m - 1 : 0);
    if (components_.size() != expected) {
      throw InvalidArgument("jump partition needs " + std::to_string(expected) +
                            " components for " + std::to_string(m) + " blocks, got " +
                            std::to_string(components_.size()));
    }
    for (int i = 1; i < m; ++i) {
      const auto& mu = components_[static_cast<std::size_t>(i - 1)];
      if (mu.length() > composition_.block(i)) {
        throw InvalidArgument("jump component " + std::to_string(i) + " has more rows than c_" +
                              std::to_string(i) + " = " + std::to_string(composition_.block(i)));
      }
      if (mu.largest() >= composition_.block(i + 1)) {
        throw InvalidArgument("jump component " + std::to_string(i) +
                              " has a row not smaller than c_" + std::to_string(i + 1) + " = " +
                              std::to_string(composition_.block(i + 1)));
      }
    }
  }

  static JumpSequence empty(const BlockComposition& composition) {
    const int m = composition.count();
    return JumpSequence(composition,
                        std::vector<Partition>(static_cast<std::size_t>(m > 0 ? m - 1 : 0)));
  }

  [[nodiscard]] const BlockComposition& composition() const noexcept { return composition_; }
  [[nodiscard]] const std::vector<Partition>& components() const noexcept { return components_; }
  [[nodiscard]] int size() const noexcept {
    int total = 0;
    for (const auto& mu : components_) total += mu.size();
    return total;
  }

  friend bool operator==(const JumpSequence&, const JumpSequence&) = default;

 private:
  BlockComposition composition_;
  std::vector<Partition> components_;
};

using InnerJumpPartition = JumpSequence<JumpSide::inner>;
using OuterJumpPartition = JumpSequence<JumpSide::outer>;

class JumpPartition {
 public:
  JumpPartition() = default;
  JumpPartition(InnerJumpPartition inner, OuterJumpPartition outer)
      : inner_(std::move(inner)), outer_(std::move(outer)) {
    if (!(inner_.composition() == outer_.composition())) {
      throw InvalidArgument("inner and outer jump partitions are attached to different compositions");
    }
  }

  static JumpPartition empty(const BlockComposition& c) {
    return {InnerJumpPartition::empty(c), OuterJumpPartition::empty(c)};
  }

  [[nodiscard]] const InnerJumpPartition& inner() const noexcept { return inner_; }
  [[nodiscard]] const OuterJumpPartition& outer() const noexcept { return outer_; }
  [[nodiscard]] const BlockComposition& composition() const noexcept { return inner_.composition(); }
  // |J| = Δ
  [[nodiscard]] int size() const noexcept { return inner_.size() + outer_.size(); }

  // J' with inner and outer exchanged.
  [[nodiscard]] JumpPartition swapped() const {
    return {InnerJumpPartition(composition(), outer_.components()),
            OuterJumpPartition(composition(), inner_.components())};
  }

  friend bool operator==(const JumpPartition&, const JumpPartition&) = default;

 private:
  InnerJumpPartition inner_;
  OuterJumpPartition outer_;
};

namespace detail {

// Raw actions on an arbitrary one-line vector; no minimality requirement.
inline void act_inner(std::vector<int>& e, const InnerJumpPartition& mu) {
  const auto& c = mu.composition();
  for (int i = 1; i < c.count(); ++i) {
    const auto& rows = mu.components()[static_cast<std::size_t>(i - 1)].parts();
    for (std::size_t j = 1; j <= rows.size(); ++j) {
      // 0-based start of the sliding entry.
      std::size_t p = static_cast<std::size_t>(c.prefix(i)) - j;
      for (int step = 0; step < rows[j - 1]; ++step, ++p) std::swap(e[p], e[p + 1]);
    }
  }
}

inline void act_outer(std::vector<int>& e, const OuterJumpPartition& nu) {
  const auto& c = nu.composition();
  auto pos = positions(e);
  for (int i = 1; i < c.count(); ++i) {
    const auto& rows = nu.components()[static_cast<std::size_t>(i - 1)].parts();
    for (std::size_t j = 1; j <= rows.size(); ++j) {
      int v = c.prefix(i) - static_cast<int>(j) + 1;
      for (int step = 0; step < rows[j - 1]; ++step, ++v) {
        // s_v from the left: values v and v+1 trade places.
        auto& pv = pos[static_cast<std::size_t>(v - 1)];
        auto& pw = pos[static_cast<std::size_t>(v)];
        std::swap(e[static_cast<std::size_t>(pv)], e[static_cast<std::size_t>(pw)]);
        std::swap(pv, pw);
      }
    }
  }
}

inline void require_attached(const Permutation& pi, const BlockComposition& c) {
  const auto found = is_minimal(pi);
  if (!found) throw InvalidArgument("jump action needs a minimal (layered) permutation");
  if (!(*found == c)) {
    throw InvalidArgument("jump partition composition does not match the permutation's blocks");
  }
}

}  // namespace detail

// π ∘ μ̄ (right action).
inline Permutation apply_inner(const Permutation& pi, const InnerJumpPartition& mu) {
  detail::require_attached(pi, mu.composition());
  auto e = pi.vec();
  detail::act_inner(e, mu);
  return Permutation(Permutation::unchecked, std::move(e));
}

// ν̄ ∘ π (left action).
inline Permutation apply_outer(const Permutation& pi, const OuterJumpPartition& nu) {
  detail::require_attached(pi, nu.composition());
  auto e = pi.vec();
  detail::act_outer(e, nu);
  return Permutation(Permutation::unchecked, std::move(e));
}

enum class JumpOrder { inner_first, outer_first };

// J(π) = ν̄ ∘ π ∘ μ̄. Left and right actions commute, so `order` only exists
// to let tests confirm that.
inline Permutation apply(const JumpPartition& J, const Permutation& pi,
                         JumpOrder order = JumpOrder::inner_first) {
  detail::require_attached(pi, J.composition());
  auto e = pi.vec();
  if (order == JumpOrder::inner_first) {
    detail::act_inner(e, J.inner());
    detail::act_outer(e, J.outer());
  } else {
    detail::act_outer(e, J.outer());
    detail::act_inner(e, J.inner());
  }
  return Permutation(Permutation::unchecked, std::move(e));
}

// (J(π))⁻¹ = J'(π) with J' = J.swapped().
inline bool inverse_identity_check(const JumpPartition& J, const Permutation& pi) {
  return inverse(apply(J, pi)) == apply(J.swapped(), pi);
}

// sh(J(π)) = sh(π).
inline bool is_valid(const JumpPartition& J, const Permutation& pi) {
  return shape_of(apply(J, pi)) == shape_of(pi);
}

// All jump partitions of size Δ attached to c. Built from the
// 2(M-1)-colored partitions of Δ: color 2i feeds inner component i+1 and
// color 2i+1 feeds outer component i+1; tuples violating the row constraints
// are dropped. Order follows colored_enumerate.
inline std::vector<JumpPartition> enumerate_jumps(const BlockComposition& c, int delta) {
  if (delta < 0) throw InvalidArgument("enumerate_jumps: delta must be nonnegative");
  const int boundaries = c.count() > 0 ? c.count() - 1 : 0;
  std::vector<JumpPartition> out;
  if (boundaries == 0) {
    if (delta == 0) out.push_back(JumpPartition::empty(c));
    return out;
  }
  for (const auto& colored : colored_enumerate(2 * boundaries, delta)) {
    std::vector<Partition> inner;
    std::vector<Partition> outer;
    bool ok = true;
    for (int i = 0; i < boundaries && ok; ++i) {
      inner.push_back(colored.restrict_to(2 * i));
      outer.push_back(colored.restrict_to(2 * i + 1));
      for (const auto* mu : {&inner.back(), &outer.back()}) {
        if (mu->length() > c.block(i + 1) || mu->largest() >= c.block(i + 2)) ok = false;
      }
    }
    if (!ok) continue;
    out.emplace_back(InnerJumpPartition(c, std::move(inner)),
                     OuterJumpPartition(c, std::move(outer)));
  }
  return out;
}

}  // namespace shapeinv

#endif  // SHAPEINV_JUMP_HPP
