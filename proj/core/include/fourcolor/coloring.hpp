#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fourcolor/errors.hpp"
#include "fourcolor/graph.hpp"

namespace fourcolor {

// One of the four colors, numbered 1..4.
class Color {
 public:
  static constexpr int count = 4;

  constexpr explicit Color(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > count) throw DomainError("color out of range 1..4");
  }

  constexpr int value() const { return value_; }

  auto operator<=>(const Color&) const = default;

  static constexpr std::array<int, count> all_values() { return {1, 2, 3, 4}; }

 private:
  std::uint8_t value_;
};

// Small set of colors, used for neighbor color sets C(v).
class ColorSet {
 public:
  void insert(Color c) { mask_ |= bit(c); }
  bool contains(Color c) const { return mask_ & bit(c); }
  int size() const { return __builtin_popcount(mask_); }
  bool empty() const { return mask_ == 0; }

  // Smallest color not in the set; requires the set to be non-full.
  Color smallest_unused() const {
    for (int v : Color::all_values())
      if (!contains(Color(v))) return Color(v);
    throw DomainError("all four colors are in use");
  }

  bool operator==(const ColorSet&) const = default;

 private:
  static std::uint8_t bit(Color c) { return static_cast<std::uint8_t>(1u << (c.value() - 1)); }
  std::uint8_t mask_ = 0;
};

// Bijection on the color values, applied when a case analysis normalizes
// neighbor colors ("renaming"). map(c) gives the new color of old color c.
class ColorPermutation {
 public:
  ColorPermutation() : table_{0, 1, 2, 3, 4} {}

  static ColorPermutation identity() { return ColorPermutation(); }

  void set(Color from, Color to) { table_[from.value()] = static_cast<std::uint8_t>(to.value()); }

  Color map(Color c) const { return Color(table_[c.value()]); }

  bool is_identity() const { return table_ == std::array<std::uint8_t, 5>{0, 1, 2, 3, 4}; }

  bool is_bijection() const {
    std::uint8_t seen = 0;
    for (int v = 1; v <= Color::count; ++v) seen |= static_cast<std::uint8_t>(1u << (table_[v] - 1));
    return seen == 0x0f;
  }

  bool operator==(const ColorPermutation&) const = default;

 private:
  std::array<std::uint8_t, 5> table_;  // index by color value, [0] unused
};

// Partial map vertex -> color. Vertices absent from the map are uncolored.
class Coloring {
 public:
  void set(VertexId v, Color c) {
    grow(v);
    if (slots_[v] == 0) ++count_;
    slots_[v] = static_cast<std::uint8_t>(c.value());
  }

  void erase(VertexId v) {
    if (v < slots_.size() && slots_[v] != 0) {
      slots_[v] = 0;
      --count_;
    }
  }

  bool is_colored(VertexId v) const { return v < slots_.size() && slots_[v] != 0; }

  std::optional<Color> get(VertexId v) const {
    if (!is_colored(v)) return std::nullopt;
    return Color(slots_[v]);
  }

  Color at(VertexId v) const {
    if (!is_colored(v)) throw DomainError("vertex " + std::to_string(v) + " is uncolored");
    return Color(slots_[v]);
  }

  std::size_t colored_count() const { return count_; }

  std::vector<VertexId> colored_vertices() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (VertexId v = 0; v < slots_.size(); ++v)
      if (slots_[v] != 0) out.push_back(v);
    return out;
  }

  // Recolors every colored vertex through the permutation.
  void apply(const ColorPermutation& perm) {
    for (VertexId v = 0; v < slots_.size(); ++v)
      if (slots_[v] != 0) slots_[v] = static_cast<std::uint8_t>(perm.map(Color(slots_[v])).value());
  }

  bool operator==(const Coloring& other) const {
    const auto n = std::max(slots_.size(), other.slots_.size());
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint8_t a = v < slots_.size() ? slots_[v] : 0;
      const std::uint8_t b = v < other.slots_.size() ? other.slots_[v] : 0;
      if (a != b) return false;
    }
    return true;
  }

 private:
  void grow(VertexId v) {
    if (v >= slots_.size()) slots_.resize(v + 1, 0);
  }

  std::vector<std::uint8_t> slots_;  // 0 = uncolored, else color value
  std::size_t count_ = 0;
};

}  // namespace fourcolor
