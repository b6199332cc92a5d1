#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcx/multicomplex.hpp"

namespace mcx {

/// U_n (η² = -1), H_n (η² = 1) and the set of all idempotents (η² = η).
enum class SpecialSetKind { SquareMinusOne, SquareOne, Idempotent };

/// Default cap on emitted elements (2^16, i.e. n <= 5).
inline constexpr std::uint64_t kDefaultSpecialBudget = std::uint64_t{1} << 16;

/// Number of elements of each special set, 2^{2^{n-1}} (saturates at 2^64 - 1).
std::uint64_t special_set_size(int n);

/// All 2^{2^{n-1}} elements of the set, generated from the sign/bit patterns
/// of their idempotent components. Pattern bit j (least significant = index 0)
/// picks the second choice at component j: i1/-i1, 1/-1, 0/1. Every element
/// is checked against its defining equation before being emitted.
std::vector<MulticomplexNumber> enumerate_special(SpecialSetKind kind, int n,
                                                  std::uint64_t budget = kDefaultSpecialBudget);

/// Defining equation of the set.
bool satisfies(SpecialSetKind kind, const MulticomplexNumber& x);

/// u·s for each s; requires u² = -1.
std::vector<MulticomplexNumber> u_times(const MulticomplexNumber& u,
                                        std::span<const MulticomplexNumber> set);

/// (1 + h)/2; requires h² = 1.
MulticomplexNumber idempotent_from_h(const MulticomplexNumber& h);

/// The signed unit x equals, if x ∈ ±I(n).
std::optional<SignedUnit> as_signed_unit(const MulticomplexNumber& x);
inline bool is_plus_minus_elementary(const MulticomplexNumber& x) { return as_signed_unit(x).has_value(); }

}  // namespace mcx
