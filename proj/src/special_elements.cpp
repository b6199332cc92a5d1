#include "mcx/special_elements.hpp"

#include <stdexcept>

#include "mcx/error.hpp"
#include "mcx/idempotent.hpp"

namespace mcx {

std::uint64_t special_set_size(int n) {
  require_order(n);
  const std::uint64_t bits = idempotent_count(n);
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

bool satisfies(SpecialSetKind kind, const MulticomplexNumber& x) {
  const MulticomplexNumber sq = square(x);
  switch (kind) {
    case SpecialSetKind::SquareMinusOne:
      return sq == -MulticomplexNumber::one(x.order());
    case SpecialSetKind::SquareOne:
      return sq == MulticomplexNumber::one(x.order());
    case SpecialSetKind::Idempotent:
      return sq == x;
  }
  return false;
}

std::vector<MulticomplexNumber> enumerate_special(SpecialSetKind kind, int n, std::uint64_t budget) {
  const std::uint64_t total = special_set_size(n);
  if (total > budget) {
    throw BudgetExceeded("special set of MC(" + std::to_string(n) + ") has " + std::to_string(total) +
                         " elements, budget is " + std::to_string(budget));
  }
  ComplexComponent first, second;
  switch (kind) {
    case SpecialSetKind::SquareMinusOne:
      first = {0, 1};
      second = {0, -1};
      break;
    case SpecialSetKind::SquareOne:
      first = {1, 0};
      second = {-1, 0};
      break;
    case SpecialSetKind::Idempotent:
      first = {0, 0};
      second = {1, 0};
      break;
  }
  const std::size_t width = idempotent_count(n);
  std::vector<MulticomplexNumber> out;
  out.reserve(total);
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    std::vector<ComplexComponent> comps(width);
    for (std::size_t j = 0; j < width; ++j) comps[j] = ((pattern >> j) & 1u) ? second : first;
    MulticomplexNumber x = from_idempotent(IdempotentVector(n, std::move(comps)));
    if (!satisfies(kind, x)) {
      throw std::logic_error("generated element fails its defining equation: " + x.to_string());
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<MulticomplexNumber> u_times(const MulticomplexNumber& u,
                                        std::span<const MulticomplexNumber> set) {
  if (!satisfies(SpecialSetKind::SquareMinusOne, u)) {
    throw DomainError("u_times requires u^2 = -1, got u = " + u.to_string());
  }
  std::vector<MulticomplexNumber> out;
  out.reserve(set.size());
  for (const auto& s : set) out.push_back(u * s);
  return out;
}

MulticomplexNumber idempotent_from_h(const MulticomplexNumber& h) {
  if (!satisfies(SpecialSetKind::SquareOne, h)) {
    throw DomainError("idempotent_from_h requires h^2 = 1, got h = " + h.to_string());
  }
  return DyadicRational(1).half() * (MulticomplexNumber::one(h.order()) + h);
}

std::optional<SignedUnit> as_signed_unit(const MulticomplexNumber& x) {
  std::optional<SignedUnit> found;
  const auto c = x.coeffs();
  for (std::uint32_t m = 0; m < c.size(); ++m) {
    if (c[m].is_zero()) continue;
    if (found) return std::nullopt;
    if (c[m] == DyadicRational(1)) {
      found = SignedUnit{1, UnitIndex{m}};
    } else if (c[m] == DyadicRational(-1)) {
      found = SignedUnit{-1, UnitIndex{m}};
    } else {
      return std::nullopt;
    }
  }
  return found;
}

}  // namespace mcx
