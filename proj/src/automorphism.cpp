#include "mcx/automorphism.hpp"

#include <cstdlib>

namespace mcx {

SignedPermutation relabel(const SignedPermutation& perm, EpsOrder order) {
  if (order == EpsOrder::Ascending) return perm;
  const int n = perm.symbols();
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int label = 1; label <= n; ++label) {
    const int v = perm(label);
    const int target = n + 1 - std::abs(v);
    im[n - label] = v > 0 ? target : -target;
  }
  return SignedPermutation(std::move(im));
}

Automorphism::Automorphism(int order, SignedPermutation perm) : order_(order), perm_(std::move(perm)) {
  require_order(order);
  if (static_cast<std::size_t>(perm_.symbols()) != idempotent_count(order)) {
    throw DimensionError("automorphism of MC(" + std::to_string(order) + ") needs a signed permutation of " +
                         std::to_string(idempotent_count(order)) + " symbols, got " +
                         std::to_string(perm_.symbols()));
  }
}

Automorphism Automorphism::identity(int order) {
  require_order(order);
  return Automorphism(order, SignedPermutation::identity(static_cast<int>(idempotent_count(order))));
}

IdempotentVector Automorphism::operator()(const IdempotentVector& v) const {
  if (v.order() != order_) throw DimensionError("automorphism and argument have different orders");
  const auto in = v.components();
  std::vector<ComplexComponent> out(in.size());
  for (int j = 1; j <= perm_.symbols(); ++j) {
    const int target = perm_(j);
    out[std::abs(target) - 1] = target > 0 ? in[j - 1] : in[j - 1].conj();
  }
  return IdempotentVector(order_, std::move(out));
}

MulticomplexNumber Automorphism::operator()(const MulticomplexNumber& x) const {
  if (x.order() != order_) throw DimensionError("automorphism and argument have different orders");
  return from_idempotent((*this)(to_idempotent(x)));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.order() != g.order()) throw DimensionError("composing automorphisms of different orders");
  return Automorphism(f.order(), f.permutation().compose(g.permutation()));
}

Automorphism inverse(const Automorphism& f) { return Automorphism(f.order(), f.permutation().inverse()); }

std::uint64_t element_order(const Automorphism& f) { return f.permutation().order(); }

std::vector<MulticomplexNumber> unit_images(const Automorphism& f) {
  std::vector<MulticomplexNumber> out;
  out.reserve(static_cast<std::size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k) out.push_back(f(MulticomplexNumber::imaginary(f.order(), k)));
  return out;
}

MulticomplexNumber hyperbolic_part(const Automorphism& f) {
  const int n = f.order();
  return multiply_by_unit(f(MulticomplexNumber::imaginary(n, 1)), SignedUnit{-1, UnitIndex::imaginary(1)});
}

std::uint64_t automorphism_group_size(int n) {
  require_order(n);
  const std::uint64_t size = n <= 6 ? signed_permutation_count(static_cast<int>(idempotent_count(n))) : 0;
  if (size == 0) throw BudgetExceeded("Aut(MC(" + std::to_string(n) + ")) does not fit in 64 bits");
  return size;
}

namespace detail {

void check_enumeration_budget(int n, std::uint64_t budget) {
  require_order(n);
  const std::uint64_t size = n <= 6 ? signed_permutation_count(static_cast<int>(idempotent_count(n))) : 0;
  if (size == 0 || size > budget) {
    throw BudgetExceeded("enumerating Aut(MC(" + std::to_string(n) + ")) exceeds the budget of " +
                         std::to_string(budget) + " elements");
  }
}

}  // namespace detail

}  // namespace mcx
