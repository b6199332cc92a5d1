#include "mcx/idempotent.hpp"

#include "mcx/error.hpp"

namespace mcx {

namespace {

using Coeffs = std::vector<DyadicRational>;

// In-place recursive split. A block x ∈ MC(m) becomes
// (x1 - x2 i_{m-1}) ε_m in its lower half and (x1 + x2 i_{m-1}) ε_m^c in its
// upper half, level by level from m = n down to 2. Afterwards coefficients
// 2c and 2c+1 hold the component at index c.
void split(Coeffs& x, int n) {
  for (int m = n; m >= 2; --m) {
    const std::size_t block = std::size_t{1} << m, half = block / 2, b = half / 2;
    for (std::size_t s = 0; s < x.size(); s += block) {
      for (std::size_t j = 0; j < half; ++j) {
        if (j & b) continue;
        DyadicRational& a0 = x[s + j];
        DyadicRational& a1 = x[s + (j | b)];
        DyadicRational& h0 = x[s + half + j];
        DyadicRational& h1 = x[s + half + (j | b)];
        // x2 i_{m-1} has coefficients (-h1, h0) at (j, j|b).
        DyadicRational e0 = a0 + h1, e1 = a1 - h0;
        h0 = a1 + h0;
        h1 = a0 - h1;
        std::swap(h0, h1);
        a0 = std::move(e0);
        a1 = std::move(e1);
      }
    }
  }
}

// Inverse of split: a at ε_m and c at ε_m^c give x1 = (a+c)/2, x2 = i_{m-1}(a-c)/2.
void join(Coeffs& x, int n) {
  for (int m = 2; m <= n; ++m) {
    const std::size_t block = std::size_t{1} << m, half = block / 2, b = half / 2;
    for (std::size_t s = 0; s < x.size(); s += block) {
      for (std::size_t j = 0; j < half; ++j) {
        if (j & b) continue;
        DyadicRational& a0 = x[s + j];
        DyadicRational& a1 = x[s + (j | b)];
        DyadicRational& c0 = x[s + half + j];
        DyadicRational& c1 = x[s + half + (j | b)];
        DyadicRational lo0 = (a0 + c0).half(), lo1 = (a1 + c1).half();
        DyadicRational hi0 = (c1 - a1).half(), hi1 = (a0 - c0).half();
        a0 = std::move(lo0);
        a1 = std::move(lo1);
        c0 = std::move(hi0);
        c1 = std::move(hi1);
      }
    }
  }
}

}  // namespace

IdempotentVector::IdempotentVector(int order, std::vector<ComplexComponent> components)
    : order_(order), components_(std::move(components)) {
  require_order(order);
  if (components_.size() != idempotent_count(order)) {
    throw DimensionError("idempotent vector of MC(" + std::to_string(order) + ") needs " +
                         std::to_string(idempotent_count(order)) + " components");
  }
}

MulticomplexNumber basis_element(IdempotentIndex j, int n) {
  require_order(n);
  if (j.mask >= idempotent_count(n)) throw DomainError("idempotent index out of range");
  MulticomplexNumber e = MulticomplexNumber::one(n);
  for (int k = 2; k <= n; ++k) {
    const UnitIndex pair{(std::uint32_t{1} << (k - 2)) | (std::uint32_t{1} << (k - 1))};
    const int sign = j.complemented(k) ? -1 : 1;
    const MulticomplexNumber factor =
        DyadicRational(1).half() * (MulticomplexNumber::one(n) + MulticomplexNumber::unit(n, pair, sign));
    e = e * factor;
  }
  return e;
}

std::vector<MulticomplexNumber> basis_elements(int n) {
  std::vector<MulticomplexNumber> out;
  out.reserve(idempotent_count(n));
  for (std::uint32_t j = 0; j < idempotent_count(n); ++j) out.push_back(basis_element({j}, n));
  return out;
}

IdempotentVector to_idempotent(const MulticomplexNumber& x) {
  const int n = x.order();
  Coeffs c(x.coeffs().begin(), x.coeffs().end());
  split(c, n);
  std::vector<ComplexComponent> comps(idempotent_count(n));
  for (std::size_t j = 0; j < comps.size(); ++j) comps[j] = {std::move(c[2 * j]), std::move(c[2 * j + 1])};
  return IdempotentVector(n, std::move(comps));
}

MulticomplexNumber from_idempotent(const IdempotentVector& v) {
  Coeffs c;
  c.reserve(2 * v.components().size());
  for (const auto& comp : v.components()) {
    c.push_back(comp.re);
    c.push_back(comp.im);
  }
  join(c, v.order());
  return MulticomplexNumber(v.order(), std::move(c));
}

IdempotentVector componentwise_mul(const IdempotentVector& u, const IdempotentVector& v) {
  if (u.order() != v.order()) throw DimensionError("order mismatch in componentwise_mul");
  std::vector<ComplexComponent> out(u.components().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.components()[i] * v.components()[i];
  return IdempotentVector(u.order(), std::move(out));
}

}  // namespace mcx
