#include "mcx/preserving.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "mcx/counting.hpp"
#include "mcx/error.hpp"
#include "mcx/idempotent.hpp"

namespace mcx {

namespace {

struct IdempotentTable {
  std::vector<MulticomplexNumber> eps;
  std::vector<MulticomplexNumber> i1_eps;
};

const IdempotentTable& idempotent_table(int n) {
  static std::mutex mutex;
  static std::map<int, IdempotentTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    IdempotentTable t;
    t.eps = basis_elements(n);
    for (const auto& e : t.eps) t.i1_eps.push_back(multiply_by_unit(e, SignedUnit{1, UnitIndex::imaginary(1)}));
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

// Reads the signed permutation off a linear map that is supposed to be a ring
// automorphism: f(i1 ε_j) must be ±i1 ε_l and f(ε_j) must be ε_l.
template <class Map>
Automorphism read_permutation(int n, const Map& map) {
  const auto& table = idempotent_table(n);
  const std::size_t count = table.eps.size();
  std::vector<int> images(count);
  for (std::size_t j = 0; j < count; ++j) {
    const IdempotentVector v = to_idempotent(map(table.i1_eps[j]));
    int target = 0;
    for (std::size_t l = 0; l < count; ++l) {
      const ComplexComponent& c = v.components()[l];
      if (c.is_zero()) continue;
      if (target != 0 || !c.re.is_zero() || (c.im != DyadicRational(1) && c.im != DyadicRational(-1))) {
        throw DomainError("unit images do not define a ring automorphism: f(i1 ε) is not ±i1 times a basis idempotent");
      }
      target = c.im.sign() * static_cast<int>(l + 1);
    }
    if (target == 0) throw DomainError("unit images do not define a ring automorphism: f(i1 ε) = 0");
    if (map(table.eps[j]) != table.eps[std::abs(target) - 1]) {
      throw DomainError("unit images do not define a ring automorphism: f(ε) is not in E_n");
    }
    images[j] = target;
  }
  return Automorphism(n, SignedPermutation(std::move(images)));
}

std::vector<SignedUnit> all_unit_images(std::span<const SignedUnit> images, int n) {
  std::vector<SignedUnit> out(unit_count(n));
  out[0] = SignedUnit{1, UnitIndex::one()};
  for (std::uint32_t m = 1; m < out.size(); ++m) {
    const int low = __builtin_ctz(m);
    out[m] = out[m & (m - 1)] * images[low];
  }
  return out;
}

}  // namespace

int reversion_sign(UnitIndex m) { return ((m.weight() / 2) & 1) ? -1 : 1; }

std::vector<std::vector<GF2Vector>> admissible_range_images(const GF2Subspace& kernel) {
  const int n = kernel.width();
  const int k = kernel.dimension();
  const int slots = n - k;
  const auto& basis = kernel.basis();
  auto combine = [&](std::uint64_t coords) {
    std::uint64_t bits = 0;
    for (int s = 0; s < k; ++s) {
      if ((coords >> s) & 1u) bits ^= basis[s].bits();
    }
    return GF2Vector(n, bits);
  };
  std::vector<std::vector<GF2Vector>> out;
  if (slots == 0) {
    out.emplace_back();
    return out;
  }
  if (slots > k) return out;
  // Coordinates over the kernel basis are independent iff the vectors are,
  // so the search runs on k-bit coordinate words.
  const std::uint64_t limit = std::uint64_t{1} << k;
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(slots), 0);
  std::vector<std::uint64_t> reduced(static_cast<std::size_t>(slots), 0);
  std::function<void(int, std::vector<std::uint64_t>&)> extend = [&](int depth, std::vector<std::uint64_t>& span_basis) {
    if (depth == slots) {
      std::vector<GF2Vector> tuple;
      for (auto c : coords) tuple.push_back(combine(c));
      out.push_back(std::move(tuple));
      return;
    }
    for (std::uint64_t c = 1; c < limit; ++c) {
      std::uint64_t x = c;
      for (auto b : span_basis) x = std::min(x, x ^ b);
      if (x == 0) continue;
      coords[depth] = c;
      span_basis.push_back(x);
      std::sort(span_basis.begin(), span_basis.end(), std::greater<>());
      extend(depth + 1, span_basis);
      span_basis.erase(std::find(span_basis.begin(), span_basis.end(), x));
    }
  };
  std::vector<std::uint64_t> span_basis;
  extend(0, span_basis);
  return out;
}

GF2Matrix preserving_y_matrix(const GF2Subspace& kernel, std::span<const GF2Vector> range_images) {
  const int n = kernel.width();
  const auto complement = kernel.complement_basis();
  if (range_images.size() != complement.size()) throw DimensionError("need one range image per complement vector");
  std::vector<GF2Vector> p_cols(kernel.basis().begin(), kernel.basis().end());
  p_cols.insert(p_cols.end(), complement.begin(), complement.end());
  std::vector<GF2Vector> t_cols(static_cast<std::size_t>(kernel.dimension()), GF2Vector::zero(n));
  t_cols.insert(t_cols.end(), range_images.begin(), range_images.end());
  // Y^T P = T  <=>  P^T Y = T^T.
  const GF2Matrix p = GF2Matrix::from_columns(n, p_cols);
  const GF2Matrix t = GF2Matrix::from_columns(n, t_cols);
  return solve(p.transpose(), t.transpose());
}

std::vector<GF2Vector> admissible_sign_rows(const GF2Matrix& y) {
  const int n = y.rows();
  if (n > 24) throw BudgetExceeded("sign-row scan is limited to n <= 24");
  const GF2Matrix yt = y.transpose();
  std::vector<GF2Vector> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if ((yt * GF2Vector(n, w)).is_zero()) out.emplace_back(n, w);
  }
  return out;
}

GF2Matrix involution_matrix(std::span<const SignedUnit> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 63) throw DomainError("need between 1 and 63 unit images");
  GF2Matrix a(n + 1, n + 1);
  for (int j = 0; j < n; ++j) {
    const SignedUnit& u = images[j];
    if (u.unit.mask >> n) throw DomainError("unit image " + u.name() + " lies outside I(" + std::to_string(n) + ")");
    if (u.unit.weight() % 2 == 0) throw DomainError("unit image " + u.name() + " squares to +1");
    for (int r = 0; r < n; ++r) a.set(r, j, (u.unit.mask >> r) & 1u);
    a.set(n, j, u.sign * reversion_sign(u.unit) < 0);
  }
  a.set(n, n, true);
  return a;
}

std::vector<SignedUnit> images_from_matrix(const GF2Matrix& a) {
  const int n = a.rows() - 1;
  if (n < 1 || a.cols() != n + 1) throw DimensionError("expected an (n+1)x(n+1) matrix");
  std::vector<SignedUnit> out;
  for (int j = 0; j < n; ++j) {
    UnitIndex m{static_cast<std::uint32_t>(a.column(j).bits() & ((std::uint64_t{1} << n) - 1))};
    const int sign = (a.get(n, j) ? -1 : 1) * reversion_sign(m);
    out.push_back(SignedUnit{sign, m});
  }
  return out;
}

bool satisfies_matrix_conditions(const GF2Matrix& a) {
  const int n1 = a.rows();
  if (n1 < 2 || a.cols() != n1) return false;
  if (a.column(n1 - 1) != GF2Vector::basis(n1, n1 - 1)) return false;
  if (a * a != GF2Matrix::identity(n1)) return false;
  const GF2Vector e(n1, (std::uint64_t{1} << (n1 - 1)) - 1);
  return a.transpose() * e == e;
}

Automorphism unit_images_to_automorphism(std::span<const SignedUnit> images, int n) {
  require_order(n);
  if (images.size() != static_cast<std::size_t>(n)) throw DimensionError("need exactly n unit images");
  for (const auto& u : images) {
    if (u.unit.mask >> n) throw DomainError("unit image " + u.name() + " lies outside I(" + std::to_string(n) + ")");
    if (u.unit.weight() % 2 == 0) throw DomainError("unit image " + u.name() + " squares to +1, not -1");
  }
  const auto full = all_unit_images(images, n);
  return read_permutation(n, [&](const MulticomplexNumber& x) {
    std::vector<DyadicRational> out(x.dimension());
    const auto c = x.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (c[m].is_zero()) continue;
      const SignedUnit& img = full[m];
      out[img.unit.mask] = img.sign > 0 ? c[m] : -c[m];
    }
    return MulticomplexNumber(n, std::move(out));
  });
}

Automorphism automorphism_from_images(std::span<const MulticomplexNumber> images) {
  const int n = static_cast<int>(images.size());
  require_order(n);
  for (const auto& x : images) {
    if (x.order() != n) throw DimensionError("unit images must lie in MC(n)");
    if (square(x) != -MulticomplexNumber::one(n)) throw DomainError("unit image " + x.to_string() + " does not square to -1");
  }
  std::vector<MulticomplexNumber> full(unit_count(n), MulticomplexNumber::one(n));
  for (std::uint32_t m = 1; m < full.size(); ++m) full[m] = full[m & (m - 1)] * images[__builtin_ctz(m)];
  return read_permutation(n, [&](const MulticomplexNumber& x) {
    MulticomplexNumber out(n);
    const auto c = x.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (!c[m].is_zero()) out = out + c[m] * full[m];
    }
    return out;
  });
}

void for_each_preserving_involution(int n, const std::function<void(const PreservingInvolution&)>& visit,
                                    std::uint64_t budget) {
  require_order(n);
  if (n > 8) throw DomainError("preserving involutions are generated for n <= 8");
  const BigCount expected = count_preserving(n);
  if (expected > BigCount(std::to_string(budget))) {
    throw BudgetExceeded("MC(" + std::to_string(n) + ") has " + expected.get_str() +
                         " preserving involutions, over the budget of " + std::to_string(budget));
  }
  std::set<std::vector<std::uint64_t>> seen;
  for (int k = (n + 1) / 2; k <= n; ++k) {
    for (const GF2Subspace& kernel : enumerate_subspaces_containing_e(n, k)) {
      for (const auto& range : admissible_range_images(kernel)) {
        const GF2Matrix y = preserving_y_matrix(kernel, range);
        const GF2Matrix m = y + GF2Matrix::identity(n);
        const auto& basis = kernel.basis();
        for (std::uint64_t coords = 0; coords < (std::uint64_t{1} << k); ++coords) {
          std::uint64_t w = 0;
          for (int s = 0; s < k; ++s) {
            if ((coords >> s) & 1u) w ^= basis[s].bits();
          }
          GF2Matrix a(n + 1, n + 1);
          for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) a.set(r, c, m.get(r, c));
          }
          for (int c = 0; c < n; ++c) a.set(n, c, (w >> c) & 1u);
          a.set(n, n, true);

          std::vector<std::uint64_t> key;
          for (int r = 0; r <= n; ++r) key.push_back(a.row(r).bits());
          if (!seen.insert(std::move(key)).second) throw std::logic_error("preserving involution generated twice");

          PreservingInvolution p;
          p.order = n;
          p.kernel_dimension = k;
          p.kernel = kernel;
          p.range_images = range;
          p.sign_row = GF2Vector(n, w);
          p.y = y;
          p.unit_images = images_from_matrix(a);
          p.matrix = std::move(a);
          p.automorphism = unit_images_to_automorphism(p.unit_images, n);
          visit(p);
        }
      }
    }
  }
  if (BigCount(static_cast<unsigned long>(seen.size())) != expected) {
    throw std::logic_error("generated " + std::to_string(seen.size()) + " preserving involutions, expected " +
                           expected.get_str());
  }
}

std::vector<PreservingInvolution> enumerate_preserving_involutions(int n, std::uint64_t budget) {
  std::vector<PreservingInvolution> out;
  for_each_preserving_involution(n, [&](const PreservingInvolution& p) { out.push_back(p); }, budget);
  return out;
}

}  // namespace mcx
