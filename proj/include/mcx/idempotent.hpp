#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "mcx/dyadic.hpp"
#include "mcx/multicomplex.hpp"

namespace mcx {

/// Index of an element of the idempotent basis E_n.
///
/// Bit t selects the factor at level k = t + 2: 0 means ε_k = (1 + i_{k-1} i_k)/2,
/// 1 means ε_k^c = (1 - i_{k-1} i_k)/2. MC(n) has 2^{n-1} such indices.
struct IdempotentIndex {
  std::uint32_t mask = 0;

  bool complemented(int level) const { return (mask >> (level - 2)) & 1u; }
  friend constexpr auto operator<=>(IdempotentIndex, IdempotentIndex) = default;
};

/// Number of idempotent basis elements of MC(n), 2^{n-1}.
constexpr std::size_t idempotent_count(int n) { return std::size_t{1} << (n - 1); }

/// re + im·i1, an element of MC(1).
struct ComplexComponent {
  DyadicRational re;
  DyadicRational im;

  ComplexComponent conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexComponent operator+(const ComplexComponent& a, const ComplexComponent& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexComponent operator*(const ComplexComponent& a, const ComplexComponent& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexComponent&, const ComplexComponent&) = default;
};

/// Coordinates of a multicomplex number in the idempotent basis E_n; one
/// MC(1) component per IdempotentIndex. For n = 1 the single component is the
/// number itself.
class IdempotentVector {
 public:
  IdempotentVector(int order, std::vector<ComplexComponent> components);

  int order() const { return order_; }
  std::span<const ComplexComponent> components() const { return components_; }
  const ComplexComponent& operator[](IdempotentIndex j) const { return components_[j.mask]; }

  friend bool operator==(const IdempotentVector&, const IdempotentVector&) = default;

 private:
  int order_;
  std::vector<ComplexComponent> components_;
};

/// Canonical coordinates of the basis idempotent Π_k (ε_k or ε_k^c).
MulticomplexNumber basis_element(IdempotentIndex j, int n);
std::vector<MulticomplexNumber> basis_elements(int n);

IdempotentVector to_idempotent(const MulticomplexNumber& x);
MulticomplexNumber from_idempotent(const IdempotentVector& v);

/// Product in idempotent coordinates (complex multiplication per component).
IdempotentVector componentwise_mul(const IdempotentVector& u, const IdempotentVector& v);

}  // namespace mcx
