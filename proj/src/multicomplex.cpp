#include "mcx/multicomplex.hpp"

#include <algorithm>
#include <charconv>

#include "mcx/error.hpp"

namespace mcx {

namespace {

void require_same_order(const MulticomplexNumber& a, const MulticomplexNumber& b) {
  if (a.order() != b.order()) {
    throw DimensionError("order mismatch: MC(" + std::to_string(a.order()) + ") vs MC(" +
                         std::to_string(b.order()) + ")");
  }
}

}  // namespace

void require_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw DomainError("order must be in [1, " + std::to_string(kMaxOrder) + "], got " +
                      std::to_string(n));
  }
}

UnitIndex UnitIndex::parse(std::string_view name) {
  UnitIndex u;
  if (name.empty() || name == "1") return u;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t end = std::min(name.find('*', pos), name.size());
    const std::string_view factor = name.substr(pos, end - pos);
    int k = 0;
    if (factor.size() < 2 || factor[0] != 'i' ||
        std::from_chars(factor.data() + 1, factor.data() + factor.size(), k).ptr !=
            factor.data() + factor.size() ||
        k < 1 || k > kMaxOrder) {
      throw DomainError("malformed unit name: '" + std::string(name) + "'");
    }
    const std::uint32_t bit = std::uint32_t{1} << (k - 1);
    if (u.mask & bit) throw DomainError("repeated factor in unit name: '" + std::string(name) + "'");
    u.mask |= bit;
    pos = end + 1;
  }
  return u;
}

std::string UnitIndex::name() const {
  std::string s;
  for (int k = 1; k <= 32; ++k) {
    if (!((mask >> (k - 1)) & 1u)) continue;
    if (!s.empty()) s += '*';
    s += 'i' + std::to_string(k);
  }
  return s;
}

std::string SignedUnit::name() const {
  const std::string base = unit.mask == 0 ? "1" : unit.name();
  return sign < 0 ? "-" + base : base;
}

SignedUnit SignedUnit::parse(std::string_view text) {
  SignedUnit u;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    u.sign = text[0] == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  u.unit = UnitIndex::parse(text);
  return u;
}

MulticomplexNumber::MulticomplexNumber(int order) : order_(order) {
  require_order(order);
  coeffs_.resize(unit_count(order));
}

MulticomplexNumber::MulticomplexNumber(int order, std::vector<DyadicRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  if (coeffs_.size() != unit_count(order)) {
    throw DimensionError("MC(" + std::to_string(order) + ") needs " +
                         std::to_string(unit_count(order)) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
}

MulticomplexNumber MulticomplexNumber::one(int order) { return unit(order, UnitIndex::one()); }

MulticomplexNumber MulticomplexNumber::unit(int order, UnitIndex u, int sign) {
  MulticomplexNumber x(order);
  if (u.mask >= x.dimension()) {
    throw DomainError("unit " + u.name() + " is not in I(" + std::to_string(order) + ")");
  }
  x.coeffs_[u.mask] = DyadicRational(sign);
  return x;
}

MulticomplexNumber MulticomplexNumber::terms(
    int order, std::initializer_list<std::pair<UnitIndex, DyadicRational>> list) {
  MulticomplexNumber x(order);
  for (const auto& [u, c] : list) {
    if (u.mask >= x.dimension()) {
      throw DomainError("unit " + u.name() + " is not in I(" + std::to_string(order) + ")");
    }
    x.coeffs_[u.mask] += c;
  }
  return x;
}

bool MulticomplexNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

MulticomplexNumber MulticomplexNumber::operator-() const {
  MulticomplexNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

MulticomplexNumber operator+(const MulticomplexNumber& a, const MulticomplexNumber& b) {
  require_same_order(a, b);
  MulticomplexNumber r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

MulticomplexNumber operator-(const MulticomplexNumber& a, const MulticomplexNumber& b) {
  require_same_order(a, b);
  MulticomplexNumber r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

MulticomplexNumber operator*(const MulticomplexNumber& a, const MulticomplexNumber& b) {
  require_same_order(a, b);
  MulticomplexNumber r(a.order_);
  const std::size_t dim = a.coeffs_.size();
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const SignedUnit p = unit_product(UnitIndex{i}, UnitIndex{j});
      const DyadicRational term = a.coeffs_[i] * b.coeffs_[j];
      if (p.sign > 0) {
        r.coeffs_[p.unit.mask] += term;
      } else {
        r.coeffs_[p.unit.mask] -= term;
      }
    }
  }
  return r;
}

MulticomplexNumber operator*(const DyadicRational& s, const MulticomplexNumber& a) {
  MulticomplexNumber r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::strong_ordering operator<=>(const MulticomplexNumber& a, const MulticomplexNumber& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                b.coeffs_.begin(), b.coeffs_.end());
}

std::string MulticomplexNumber::to_string() const {
  std::string s;
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m) {
    const DyadicRational& c = coeffs_[m];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    const DyadicRational mag = negative ? -c : c;
    const bool unit_coeff = mag == DyadicRational(1);
    if (m == 0) {
      s += mag.to_string();
    } else {
      if (!unit_coeff) s += mag.to_string() + "*";
      s += UnitIndex{m}.name();
    }
  }
  return s.empty() ? "0" : s;
}

MulticomplexNumber square(const MulticomplexNumber& x) { return x * x; }

MulticomplexNumber multiply_by_unit(const MulticomplexNumber& x, const SignedUnit& u) {
  if (u.unit.mask >= x.dimension()) {
    throw DomainError("unit " + u.unit.name() + " is not in I(" + std::to_string(x.order()) + ")");
  }
  std::vector<DyadicRational> out(x.dimension());
  const auto in = x.coeffs();
  for (std::uint32_t m = 0; m < in.size(); ++m) {
    if (in[m].is_zero()) continue;
    const SignedUnit p = unit_product(UnitIndex{m}, u.unit);
    out[p.unit.mask] = (p.sign * u.sign > 0) ? in[m] : -in[m];
  }
  return MulticomplexNumber(x.order(), std::move(out));
}

MulticomplexNumber embed(const MulticomplexNumber& x, int n) {
  if (n < x.order()) {
    throw DomainError("cannot embed MC(" + std::to_string(x.order()) + ") into MC(" +
                      std::to_string(n) + ")");
  }
  std::vector<DyadicRational> out(unit_count(n));
  std::copy(x.coeffs().begin(), x.coeffs().end(), out.begin());
  return MulticomplexNumber(n, std::move(out));
}

}  // namespace mcx
