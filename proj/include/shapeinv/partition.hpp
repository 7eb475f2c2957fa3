#ifndef SHAPEINV_PARTITION_HPP
#define SHAPEINV_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace shapeinv {

// An integer partition: parts weakly decreasing and strictly positive. The
// empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) {
        throw InvalidArgument("partition parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw InvalidArgument("partition parts must be weakly decreasing");
      }
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
  [[nodiscard]] const std::vector<int>& vec() const noexcept { return parts_; }

  // |λ|
  [[nodiscard]] int size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  // ℓ(λ)
  [[nodiscard]] int length() const noexcept {
    return static_cast<int>(parts_.size());
  }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  // Largest part, 0 for the empty partition.
  [[nodiscard]] int largest() const noexcept {
    return parts_.empty() ? 0 : parts_.front();
  }
  // Smallest part, 0 for the empty partition.
  [[nodiscard]] int smallest() const noexcept {
    return parts_.empty() ? 0 : parts_.back();
  }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_.at(i); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Run-length form ⟨t_1^{m_1}, …, t_k^{m_k}⟩ with t_1 > … > t_k.
struct FrequencyEntry {
  int value = 0;
  int multiplicity = 0;
  friend bool operator==(const FrequencyEntry&, const FrequencyEntry&) = default;
};

class FrequencyForm {
 public:
  FrequencyForm() = default;
  explicit FrequencyForm(std::vector<FrequencyEntry> entries)
      : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].value <= 0 || entries_[i].multiplicity <= 0) {
        throw InvalidArgument("frequency entries must be positive");
      }
      if (i > 0 && entries_[i].value >= entries_[i - 1].value) {
        throw InvalidArgument("frequency values must strictly decrease");
      }
    }
  }

  [[nodiscard]] std::span<const FrequencyEntry> entries() const noexcept {
    return entries_;
  }
  // k
  [[nodiscard]] int distinct() const noexcept {
    return static_cast<int>(entries_.size());
  }
  // M = Σ m_i
  [[nodiscard]] int total_multiplicity() const noexcept {
    int m = 0;
    for (const auto& e : entries_) m += e.multiplicity;
    return m;
  }
  [[nodiscard]] int size() const noexcept {
    int n = 0;
    for (const auto& e : entries_) n += e.value * e.multiplicity;
    return n;
  }
  [[nodiscard]] std::vector<int> multiplicities() const {
    std::vector<int> ms;
    ms.reserve(entries_.size());
    for (const auto& e : entries_) ms.push_back(e.multiplicity);
    return ms;
  }
  [[nodiscard]] Partition expand() const {
    std::vector<int> parts;
    for (const auto& e : entries_) parts.insert(parts.end(), e.multiplicity, e.value);
    return Partition(std::move(parts));
  }

  friend bool operator==(const FrequencyForm&, const FrequencyForm&) = default;

 private:
  std::vector<FrequencyEntry> entries_;
};

// A part of a c-colored partition. Colors are 0-based.
struct ColoredPart {
  int value = 0;
  int color = 0;
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

// Canonical order: value descending, then color ascending.
inline bool canonically_precedes(const ColoredPart& a, const ColoredPart& b) {
  return a.value > b.value || (a.value == b.value && a.color < b.color);
}

class ColoredPartition {
 public:
  ColoredPartition() = default;
  explicit ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].value <= 0 || parts_[i].color < 0) {
        throw InvalidArgument("colored parts need positive value and color >= 0");
      }
      if (i > 0 && canonically_precedes(parts_[i], parts_[i - 1])) {
        throw InvalidArgument("colored parts must be in canonical order");
      }
    }
  }

  [[nodiscard]] std::span<const ColoredPart> parts() const noexcept { return parts_; }
  [[nodiscard]] int size() const noexcept {
    int n = 0;
    for (const auto& p : parts_) n += p.value;
    return n;
  }

  // The parts of one color, as an ordinary partition.
  [[nodiscard]] Partition restrict_to(int color) const {
    std::vector<int> parts;
    for (const auto& p : parts_) {
      if (p.color == color) parts.push_back(p.value);
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  std::vector<ColoredPart> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> result(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++result[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(result));
}

inline FrequencyForm frequency_form(const Partition& p) {
  std::vector<FrequencyEntry> entries;
  for (int part : p.parts()) {
    if (!entries.empty() && entries.back().value == part) {
      ++entries.back().multiplicity;
    } else {
      entries.push_back({part, 1});
    }
  }
  return FrequencyForm(std::move(entries));
}

// M! / Π ms_i!, exact.
inline BigInt multinomial(int total, std::span<const int> ms) {
  if (total < 0) throw InvalidArgument("multinomial: total must be nonnegative");
  long sum = 0;
  for (int m : ms) {
    if (m < 0) throw InvalidArgument("multinomial: parts must be nonnegative");
    sum += m;
  }
  if (sum != total) throw InvalidArgument("multinomial: parts must sum to the total");
  BigInt result = factorial(static_cast<unsigned>(total));
  for (int m : ms) result /= factorial(static_cast<unsigned>(m));
  return result;
}

inline BigInt multinomial(int total, std::initializer_list<int> ms) {
  return multinomial(total, std::span<const int>(ms.begin(), ms.size()));
}

// Number of partitions of n into parts of c colors: the coefficient of x^n in
// Π_{m≥1} (1 - x^m)^{-c}, by exact series expansion.
inline BigInt colored_count(int colors, int n) {
  if (colors < 0) throw InvalidArgument("colored_count: colors must be nonnegative");
  if (n < 0) return 0;
  std::vector<BigInt> coef(static_cast<std::size_t>(n) + 1, 0);
  coef[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int rep = 0; rep < colors; ++rep) {
      for (int j = m; j <= n; ++j) coef[static_cast<std::size_t>(j)] += coef[static_cast<std::size_t>(j - m)];
    }
  }
  return coef[static_cast<std::size_t>(n)];
}

namespace detail {

inline void colored_enumerate_rec(int colors, int remaining, ColoredPart last,
                                  std::vector<ColoredPart>& current,
                                  std::vector<ColoredPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int value = std::min(remaining, last.value); value >= 1; --value) {
    const int first_color = (value == last.value) ? last.color : 0;
    for (int color = first_color; color < colors; ++color) {
      current.push_back({value, color});
      colored_enumerate_rec(colors, remaining - value, {value, color}, current, out);
      current.pop_back();
    }
  }
}

inline void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace detail

// All c-colored partitions of n in canonical order. The listing is ordered
// lexicographically by the canonical part sequence, larger parts first; for
// c = 2, n = 2 this is 2, 2̄, 11, 11̄, 1̄1̄.
inline std::vector<ColoredPartition> colored_enumerate(int colors, int n) {
  if (colors <= 0) throw InvalidArgument("colored_enumerate: colors must be positive");
  if (n < 0) throw InvalidArgument("colored_enumerate: n must be nonnegative");
  std::vector<ColoredPartition> out;
  std::vector<ColoredPart> current;
  detail::colored_enumerate_rec(colors, n, {n, 0}, current, out);
  return out;
}

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), …, (1^n).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  detail::partitions_rec(n, n, current, out);
  return out;
}

// Dot-joined parts, e.g. "4.3.1". Used as the table key and in CSV output.
inline std::string partition_key(const Partition& p) {
  std::string key;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) key += '.';
    key += std::to_string(p.parts()[i]);
  }
  return key;
}

}  // namespace shapeinv

#endif  // SHAPEINV_PARTITION_HPP
