#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace finsler {

inline constexpr int kMaxJetOrder = 5;
inline constexpr int kMaxJetVars = 8;  // 2n with n <= 4

/// Multi-index over at most kMaxJetVars variables, one nibble per exponent.
/// Variables 0..n-1 are chart coordinates x, variables n..2n-1 are fiber
/// coordinates y.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  static MultiIndex unit(int var);
  static MultiIndex from_exponents(std::span<const int> exps);

  int exponent(int var) const {
    return static_cast<int>((key_ >> (4 * var)) & 0xFu);
  }
  int degree() const;
  MultiIndex plus(const MultiIndex& o) const;
  /// Componentwise difference; caller guarantees o <= *this componentwise.
  MultiIndex minus(const MultiIndex& o) const;
  bool contains(const MultiIndex& o) const;
  double factorial() const;  // product of exponent factorials

  std::uint32_t key() const { return key_; }
  std::string str(int nvars) const;

  friend bool operator==(MultiIndex a, MultiIndex b) = default;
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
    return a.key_ <=> b.key_;
  }

 private:
  explicit constexpr MultiIndex(std::uint32_t key) : key_(key) {}
  std::uint32_t key_ = 0;
};

}  // namespace finsler
