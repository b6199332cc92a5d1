#include "mcx/dyadic.hpp"

#include <algorithm>
#include <limits>

#include "mcx/error.hpp"

namespace mcx {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == start ||
      !std::all_of(digits.begin() + static_cast<long>(start), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed dyadic rational: '" + std::string(whole) + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

mpz_class from_int128(int128 v) {
  const bool negative = v < 0;
  const uint128 mag = negative ? -static_cast<uint128>(v) : static_cast<uint128>(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), hi.get_mpz_t(), 64);
  r += static_cast<unsigned long>(mag & ~std::uint64_t{0});
  return negative ? mpz_class(-r) : r;
}

bool fits_int64(int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// small << shift without overflow, when shift < 64.
int128 widen(std::int64_t small, std::uint32_t shift) { return static_cast<int128>(small) * (int128{1} << shift); }

}  // namespace

DyadicRational::DyadicRational(mpz_class numerator, std::uint32_t exponent) : exponent_(exponent) {
  assign_big(std::move(numerator));
}

DyadicRational::DyadicRational(const DyadicRational& other)
    : small_(other.small_),
      big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr),
      exponent_(other.exponent_) {}

DyadicRational& DyadicRational::operator=(const DyadicRational& other) {
  if (this != &other) {
    small_ = other.small_;
    big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    exponent_ = other.exponent_;
  }
  return *this;
}

void DyadicRational::assign_big(mpz_class value) {
  big_ = std::make_unique<mpz_class>(std::move(value));
  small_ = 0;
  normalize();
}

DyadicRational DyadicRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return DyadicRational(parse_integer(text, text), 0);

  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) <= 0 || mpz_popcount(den.get_mpz_t()) != 1) {
    throw DomainError("denominator is not a positive power of two: '" + std::string(text) + "'");
  }
  const auto exponent = static_cast<std::uint32_t>(mpz_scan1(den.get_mpz_t(), 0));
  return DyadicRational(std::move(num), exponent);
}

mpz_class DyadicRational::numerator() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

mpz_class DyadicRational::denominator() const {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, exponent_);
  return d;
}

void DyadicRational::normalize() {
  if (big_) {
    mpz_class& n = *big_;
    if (sgn(n) == 0) {
      big_.reset();
      small_ = 0;
      exponent_ = 0;
      return;
    }
    const auto twos = static_cast<std::uint32_t>(mpz_scan1(n.get_mpz_t(), 0));
    const std::uint32_t shift = std::min(twos, exponent_);
    if (shift > 0) {
      mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), shift);
      exponent_ -= shift;
    }
    if (n.fits_slong_p()) {
      small_ = n.get_si();
      big_.reset();
    }
    return;
  }
  if (small_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto twos = static_cast<std::uint32_t>(__builtin_ctzll(static_cast<std::uint64_t>(small_)));
  const std::uint32_t shift = std::min(twos, exponent_);
  small_ >>= shift;
  exponent_ -= shift;
}

DyadicRational DyadicRational::ldexp(long shift) const {
  if (is_zero()) return {};
  if (shift >= 0) {
    const auto up = static_cast<unsigned long>(shift);
    if (up <= exponent_) {
      DyadicRational r = *this;
      r.exponent_ -= static_cast<std::uint32_t>(up);
      r.normalize();
      return r;
    }
    mpz_class n;
    const mpz_class num = numerator();
    mpz_mul_2exp(n.get_mpz_t(), num.get_mpz_t(), up - exponent_);
    return DyadicRational(std::move(n), 0);
  }
  const auto down = static_cast<unsigned long>(-shift);
  if (exponent_ + down > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("dyadic exponent overflow");
  }
  DyadicRational r = *this;
  r.exponent_ += static_cast<std::uint32_t>(down);
  r.normalize();
  return r;
}

DyadicRational DyadicRational::operator-() const {
  if (big_) return DyadicRational(-*big_, exponent_);
  if (small_ == std::numeric_limits<std::int64_t>::min()) return DyadicRational(-numerator(), exponent_);
  DyadicRational r;
  r.small_ = -small_;
  r.exponent_ = exponent_;
  return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (!big_ && !other.big_) {
    const std::uint32_t e = std::max(exponent_, other.exponent_);
    const std::uint32_t da = e - exponent_, db = e - other.exponent_;
    if (da < 62 && db < 62) {
      const int128 sum = widen(small_, da) + widen(other.small_, db);
      exponent_ = e;
      if (fits_int64(sum)) {
        small_ = static_cast<std::int64_t>(sum);
        normalize();
      } else {
        assign_big(from_int128(sum));
      }
      return *this;
    }
  }
  mpz_class a = numerator();
  const mpz_class b = other.numerator();
  if (exponent_ >= other.exponent_) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), b.get_mpz_t(), exponent_ - other.exponent_);
    a += t;
  } else {
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), other.exponent_ - exponent_);
    a += b;
    exponent_ = other.exponent_;
  }
  assign_big(std::move(a));
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& other) { return *this += -other; }

DyadicRational& DyadicRational::operator*=(const DyadicRational& other) {
  if (is_zero() || other.is_zero()) return *this = DyadicRational{};
  exponent_ += other.exponent_;
  std::int64_t p;
  if (!big_ && !other.big_ && !__builtin_mul_overflow(small_, other.small_, &p)) {
    small_ = p;
    normalize();
    return *this;
  }
  assign_big(numerator() * other.numerator());
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  if (!a.big_ && !b.big_) {
    const std::uint32_t e = std::max(a.exponent_, b.exponent_);
    const std::uint32_t da = e - a.exponent_, db = e - b.exponent_;
    if (da < 62 && db < 62) return widen(a.small_, da) <=> widen(b.small_, db);
  }
  const mpz_class an = a.numerator(), bn = b.numerator();
  int c;
  if (a.exponent_ == b.exponent_) {
    c = cmp(an, bn);
  } else if (a.exponent_ > b.exponent_) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), bn.get_mpz_t(), a.exponent_ - b.exponent_);
    c = cmp(an, t);
  } else {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), an.get_mpz_t(), b.exponent_ - a.exponent_);
    c = cmp(t, bn);
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string DyadicRational::to_string() const {
  if (exponent_ == 0) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string DyadicRational::to_fraction_string() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

}  // namespace mcx
