#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfuse {

enum class IndexKind { Naturals, Integers, ModEven };

/// The label set R of dual iterates: ℕ, ℤ, or ℤ/2d with 2d even.
class IndexSet {
public:
  static IndexSet naturals() { return IndexSet(IndexKind::Naturals, 0); }
  static IndexSet integers() { return IndexSet(IndexKind::Integers, 0); }
  static IndexSet mod_even(std::int64_t modulus)
  {
    if (modulus < 2 || modulus % 2 != 0)
      throw std::invalid_argument("IndexSet: modulus must be even and >= 2");
    return IndexSet(IndexKind::ModEven, modulus);
  }

  IndexKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }

  bool operator==(const IndexSet &) const = default;

  bool contains(std::int64_t letter) const
  {
    switch (kind_) {
    case IndexKind::Naturals: return letter >= 0;
    case IndexKind::Integers: return true;
    case IndexKind::ModEven: return 0 <= letter && letter < modulus_;
    }
    return false;
  }

  /// Representative in [0, 2d) for ModEven; identity otherwise.
  std::int64_t canonical(std::int64_t letter) const
  {
    if (kind_ != IndexKind::ModEven) return letter;
    std::int64_t m = letter % modulus_;
    return m < 0 ? m + modulus_ : m;
  }

  /// letter + 1 in R.
  std::int64_t shift(std::int64_t letter) const
  {
    return canonical(letter + 1);
  }

  // Well-defined for ModEven since the modulus is even.
  bool is_even(std::int64_t letter) const { return canonical(letter) % 2 == 0; }

  /// b = a ± 1 in R (modular for ModEven; the two signs coincide mod 2).
  bool adjacent(std::int64_t a, std::int64_t b) const
  {
    if (kind_ == IndexKind::ModEven) {
      std::int64_t diff = canonical(b - a);
      return diff == 1 || diff == modulus_ - 1;
    }
    return b == a + 1 || b == a - 1;
  }

  std::string to_string() const
  {
    switch (kind_) {
    case IndexKind::Naturals: return "nat";
    case IndexKind::Integers: return "int";
    case IndexKind::ModEven: return "mod:" + std::to_string(modulus_);
    }
    return "?";
  }

private:
  IndexSet(IndexKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  IndexKind kind_;
  std::int64_t modulus_;
};

} // namespace qfuse
