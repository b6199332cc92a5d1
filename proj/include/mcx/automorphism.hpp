#pragma once

#include <cstdint>
#include <ranges>
#include <vector>

#include "mcx/error.hpp"
#include "mcx/idempotent.hpp"
#include "mcx/multicomplex.hpp"
#include "mcx/signed_permutation.hpp"

namespace mcx {

/// Element budget for exhaustive enumerations: |B_8|, i.e. everything up to n = 4.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'321'920;

/// How permutation symbols are written in text and JSON.
///
/// Ascending: symbol j is the basis idempotent with IdempotentIndex j-1.
/// Descending: symbol j is IdempotentIndex 2^{n-1} - j, so symbol 1 is the
/// product of all ε_k^c. For n = 3 this is the labelling
/// ε1 = (1 - i1i2 - i1i3 - i2i3)/4, ..., ε4 = (1 + i1i2 - i1i3 + i2i3)/4.
enum class EpsOrder { Ascending, Descending };

/// Converts between a labelled permutation and the internal (ascending) one.
/// Both orders are involutive relabellings, so the same call goes either way.
SignedPermutation relabel(const SignedPermutation& perm, EpsOrder order);

/// Real-linear automorphism of MC(n), encoded by π ∈ B_{2^{n-1}} through
/// f(i1 ε_j) = i1 sgn(π(j)) ε_{|π(j)|} and f(ε_j) = ε_{|π(j)|}. Symbols are
/// internal idempotent indices plus one.
class Automorphism {
 public:
  Automorphism(int order, SignedPermutation perm);

  static Automorphism identity(int order);

  int order() const { return order_; }
  const SignedPermutation& permutation() const { return perm_; }

  /// The idempotent component x_j + i1 y_j moves to index |π(j)| as
  /// x_j + sgn(π(j)) i1 y_j.
  IdempotentVector operator()(const IdempotentVector& v) const;
  MulticomplexNumber operator()(const MulticomplexNumber& x) const;

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  int order_;
  SignedPermutation perm_;
};

inline MulticomplexNumber apply(const Automorphism& f, const MulticomplexNumber& x) { return f(x); }

/// (f ∘ g)(x) = f(g(x)).
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);

std::uint64_t element_order(const Automorphism& f);
inline bool is_involution(const Automorphism& f) { return element_order(f) <= 2; }
/// f^(r) = Id.
inline bool is_r_involution(const Automorphism& f, std::uint64_t r) { return r % element_order(f) == 0; }

/// f(i_1), ..., f(i_n).
std::vector<MulticomplexNumber> unit_images(const Automorphism& f);
/// h ∈ H_n with f(i1) = i1 h, i.e. h = -i1 f(i1).
MulticomplexNumber hyperbolic_part(const Automorphism& f);

/// |Aut(MC(n))| = 2^{2^{n-1}} (2^{n-1})! if it fits in 64 bits; throws otherwise.
std::uint64_t automorphism_group_size(int n);

namespace detail {
void check_enumeration_budget(int n, std::uint64_t budget);
}

/// All real-linear automorphisms of MC(n), in SignedPermutations order.
inline auto enumerate_automorphisms(int n, std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::check_enumeration_budget(n, budget);
  return SignedPermutations(static_cast<int>(idempotent_count(n))) |
         std::views::transform([n](const SignedPermutation& p) { return Automorphism(n, p); });
}

/// Automorphisms with f^(r) = Id (filtered by element order dividing r).
inline auto enumerate_r_involutions(int n, std::uint64_t r,
                                    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (r < 1) throw DomainError("r must be >= 1");
  detail::check_enumeration_budget(n, budget);
  return SignedPermutations(static_cast<int>(idempotent_count(n))) |
         std::views::filter([r](const SignedPermutation& p) { return r % p.order() == 0; }) |
         std::views::transform([n](const SignedPermutation& p) { return Automorphism(n, p); });
}

inline auto enumerate_involutions(int n, std::uint64_t budget = kDefaultEnumerationBudget) {
  return enumerate_r_involutions(n, 2, budget);
}

}  // namespace mcx
