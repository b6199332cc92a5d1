#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mcx {

/// Exact rational number of the form numerator / 2^exponent.
///
/// Always kept reduced: the numerator is odd unless the value is zero, and
/// zero is stored with exponent 0. Equality is therefore field-wise.
/// Numerators that fit in 64 bits are kept inline; GMP takes over beyond that.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value) : small_(value) {}  // NOLINT(google-explicit-constructor)
  DyadicRational(const DyadicRational& other);
  DyadicRational(DyadicRational&&) noexcept = default;
  DyadicRational& operator=(const DyadicRational& other);
  DyadicRational& operator=(DyadicRational&&) noexcept = default;
  ~DyadicRational() = default;
  DyadicRational(mpz_class numerator, std::uint32_t exponent);

  /// Parses "p", "-p" or "p/q" where q is a positive power of two.
  static DyadicRational parse(std::string_view text);

  mpz_class numerator() const;
  std::uint32_t exponent() const { return exponent_; }
  mpz_class denominator() const;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return big_ ? sgn(*big_) : (small_ > 0) - (small_ < 0); }

  /// Value times 2^shift (shift may be negative).
  DyadicRational ldexp(long shift) const;
  DyadicRational half() const { return ldexp(-1); }

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& other);
  DyadicRational& operator-=(const DyadicRational& other);
  DyadicRational& operator*=(const DyadicRational& other);

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) { return a *= b; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    if (a.exponent_ != b.exponent_ || bool(a.big_) != bool(b.big_)) return false;
    return a.big_ ? *a.big_ == *b.big_ : a.small_ == b.small_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Always "p/q", with q = 2^exponent (so integers print as "p/1").
  std::string to_fraction_string() const;

 private:
  // Reduces, then moves a big numerator back inline when it fits.
  void normalize();
  void assign_big(mpz_class value);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
  std::uint32_t exponent_ = 0;
};

}  // namespace mcx
