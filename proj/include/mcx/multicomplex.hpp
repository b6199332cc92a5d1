#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcx/dyadic.hpp"

namespace mcx {

/// Largest order for which dense storage is supported (2^16 coefficients).
inline constexpr int kMaxOrder = 16;

/// Product of distinct imaginary units: bit k-1 set iff i_k is a factor.
/// Mask 0 is the real unit 1.
struct UnitIndex {
  std::uint32_t mask = 0;

  static constexpr UnitIndex one() { return {0}; }
  /// The elementary unit i_k, k >= 1.
  static constexpr UnitIndex imaginary(int k) { return {std::uint32_t{1} << (k - 1)}; }

  /// Parses "" or "1" (the real unit) and products like "i1*i3".
  static UnitIndex parse(std::string_view name);

  int weight() const { return __builtin_popcount(mask); }
  bool contains(int k) const { return (mask >> (k - 1)) & 1u; }
  /// "" for 1, otherwise "i1*i3" style.
  std::string name() const;

  friend constexpr auto operator<=>(UnitIndex, UnitIndex) = default;
};

/// A basis unit with a sign, i.e. an element of ±I(n).
struct SignedUnit {
  int sign = 1;
  UnitIndex unit;

  /// "-i1*i2" style; "1" / "-1" for the real unit.
  std::string name() const;
  static SignedUnit parse(std::string_view text);

  friend constexpr auto operator<=>(const SignedUnit&, const SignedUnit&) = default;
};

/// Product of two basis units. Units commute and square to -1, so the sign
/// is (-1)^popcount(a & b) and the unit is a XOR b.
constexpr SignedUnit unit_product(UnitIndex a, UnitIndex b) {
  return {(__builtin_popcount(a.mask & b.mask) & 1) ? -1 : 1, UnitIndex{a.mask ^ b.mask}};
}

constexpr SignedUnit operator*(const SignedUnit& a, const SignedUnit& b) {
  SignedUnit p = unit_product(a.unit, b.unit);
  p.sign *= a.sign * b.sign;
  return p;
}

/// Element of MC(n) in the canonical basis I(n): 2^n exact coefficients
/// indexed by UnitIndex::mask in increasing order (1, i1, i2, i1i2, i3, ...).
class MulticomplexNumber {
 public:
  /// Zero of MC(order).
  explicit MulticomplexNumber(int order);
  MulticomplexNumber(int order, std::vector<DyadicRational> coeffs);

  static MulticomplexNumber one(int order);
  static MulticomplexNumber unit(int order, UnitIndex u, int sign = 1);
  static MulticomplexNumber unit(int order, const SignedUnit& u) { return unit(order, u.unit, u.sign); }
  static MulticomplexNumber imaginary(int order, int k) { return unit(order, UnitIndex::imaginary(k)); }
  static MulticomplexNumber terms(int order,
                                  std::initializer_list<std::pair<UnitIndex, DyadicRational>> list);

  int order() const { return order_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const DyadicRational& coeff(UnitIndex u) const { return coeffs_[u.mask]; }
  std::span<const DyadicRational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  MulticomplexNumber operator-() const;
  friend MulticomplexNumber operator+(const MulticomplexNumber& a, const MulticomplexNumber& b);
  friend MulticomplexNumber operator-(const MulticomplexNumber& a, const MulticomplexNumber& b);
  friend MulticomplexNumber operator*(const MulticomplexNumber& a, const MulticomplexNumber& b);
  friend MulticomplexNumber operator*(const DyadicRational& s, const MulticomplexNumber& a);

  friend bool operator==(const MulticomplexNumber&, const MulticomplexNumber&) = default;
  /// Total order (order first, then coefficients lexicographically); used for sets.
  friend std::strong_ordering operator<=>(const MulticomplexNumber& a, const MulticomplexNumber& b);

  /// Human-readable sum, e.g. "1/2*i1 + 1/2*i2 - 1/2*i1*i2*i3".
  std::string to_string() const;

 private:
  int order_;
  std::vector<DyadicRational> coeffs_;
};

/// Number of canonical units of MC(n), 2^n.
constexpr std::size_t unit_count(int n) { return std::size_t{1} << n; }

/// Throws DomainError unless 1 <= n <= kMaxOrder.
void require_order(int n);

MulticomplexNumber square(const MulticomplexNumber& x);
/// x * u for a signed basis unit u; a signed permutation of coefficients.
MulticomplexNumber multiply_by_unit(const MulticomplexNumber& x, const SignedUnit& u);
/// Image of x under MC(m) ⊂ MC(n).
MulticomplexNumber embed(const MulticomplexNumber& x, int n);

}  // namespace mcx
