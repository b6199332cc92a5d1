#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcx/error.hpp"
#include "mcx/multicomplex.hpp"
#include "support.hpp"

using namespace mcx;
using mcx::test::lin;

namespace {

// The textbook recursion: write x = x1 + x2 i_n with x1, x2 ∈ MC(n-1), then
// (x1 + x2 i_n)(y1 + y2 i_n) = (x1 y1 - x2 y2) + (x1 y2 + x2 y1) i_n.
std::vector<DyadicRational> recursive_product(const std::vector<DyadicRational>& x,
                                              const std::vector<DyadicRational>& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const std::vector<DyadicRational> x1(x.begin(), x.begin() + h), x2(x.begin() + h, x.end());
  const std::vector<DyadicRational> y1(y.begin(), y.begin() + h), y2(y.begin() + h, y.end());
  const auto a = recursive_product(x1, y1), b = recursive_product(x2, y2);
  const auto c = recursive_product(x1, y2), d = recursive_product(x2, y1);
  std::vector<DyadicRational> out(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = a[i] - b[i];
    out[h + i] = c[i] + d[i];
  }
  return out;
}

}  // namespace

TEST_CASE("unit product examples") {
  const auto i1 = UnitIndex::imaginary(1), i2 = UnitIndex::imaginary(2), i3 = UnitIndex::imaginary(3);
  CHECK(unit_product(i1, i1) == SignedUnit{-1, UnitIndex::one()});
  CHECK(unit_product(i1, i2) == SignedUnit{1, UnitIndex{i1.mask | i2.mask}});
  CHECK(unit_product(UnitIndex{i1.mask | i2.mask}, UnitIndex{i2.mask | i3.mask}) ==
        SignedUnit{-1, UnitIndex{i1.mask | i3.mask}});
}

TEST_CASE("unit product is a commutative associative signed monoid") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t N = 1u << n;
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t b = 0; b < N; ++b) {
        REQUIRE(unit_product({a}, {b}) == unit_product({b}, {a}));
        for (std::uint32_t c = 0; c < N; ++c) {
          const SignedUnit A{1, {a}}, B{1, {b}}, C{1, {c}};
          REQUIRE((A * B) * C == A * (B * C));
        }
      }
    }
  }
}

TEST_CASE("unit names") {
  CHECK(UnitIndex::parse("i1*i3").mask == 0b101u);
  CHECK(UnitIndex::parse("").mask == 0);
  CHECK(UnitIndex::parse("1").mask == 0);
  CHECK(UnitIndex{0b110}.name() == "i2*i3");
  CHECK(UnitIndex{0}.name().empty());
  CHECK(SignedUnit::parse("-i2").name() == "-i2");
  CHECK(SignedUnit{-1, UnitIndex::one()}.name() == "-1");
  CHECK_THROWS_AS(UnitIndex::parse("i1*i1"), DomainError);
  CHECK_THROWS_AS(UnitIndex::parse("j2"), DomainError);
  CHECK_THROWS_AS(UnitIndex::parse("i0"), DomainError);
}

TEST_CASE("addition examples") {
  const auto one = MulticomplexNumber::one(2);
  CHECK((one + (-one)).is_zero());
  const auto i1 = MulticomplexNumber::imaginary(2, 1);
  CHECK(i1 + i1 == DyadicRational(2) * i1);
  CHECK(lin(2, "1/2", {"1", "i1*i2"}) + lin(2, "1/2", {"1", "-i1*i2"}) == one);
  CHECK_THROWS_AS(MulticomplexNumber::one(2) + MulticomplexNumber::one(3), DimensionError);
  CHECK_THROWS_AS(MulticomplexNumber::one(2) * MulticomplexNumber::one(3), DimensionError);
}

TEST_CASE("multiplication examples") {
  const auto eps = lin(2, "1/2", {"1", "i1*i2"});
  const auto eps_c = lin(2, "1/2", {"1", "-i1*i2"});
  CHECK(eps * eps == eps);
  CHECK((eps * eps_c).is_zero());
  const auto i123 = lin(3, "1", {"i1*i2*i3"});
  CHECK(i123 * i123 == -MulticomplexNumber::one(3));
  CHECK(square(lin(3, "1/2", {"i1", "i2", "i3", "i1*i2*i3"})) == -MulticomplexNumber::one(3));
}

TEST_CASE("scale, embed and squares of generators") {
  CHECK(DyadicRational::parse("1/2") * lin(2, "1", {"1", "i1*i2"}) == lin(2, "1/2", {"1", "i1*i2"}));
  CHECK(embed(MulticomplexNumber::imaginary(1, 1), 3) == MulticomplexNumber::imaginary(3, 1));
  CHECK_THROWS_AS(embed(MulticomplexNumber::one(3), 2), DomainError);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(square(MulticomplexNumber::imaginary(n, k)) == -MulticomplexNumber::one(n));
  }
  CHECK_THROWS_AS(MulticomplexNumber(0), DomainError);
  CHECK_THROWS_AS(MulticomplexNumber(17), DomainError);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto x = test::random_element(n, rng), y = test::random_element(n, rng), z = test::random_element(n, rng);
      REQUIRE(x * y == y * x);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE(x - x == MulticomplexNumber(n));
      REQUIRE(x * MulticomplexNumber::one(n) == x);
    }
  }
}

TEST_CASE("product agrees with the recursive definition") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 25; ++t) {
      const auto x = test::random_element(n, rng), y = test::random_element(n, rng);
      const std::vector<DyadicRational> xs(x.coeffs().begin(), x.coeffs().end()), ys(y.coeffs().begin(), y.coeffs().end());
      REQUIRE(x * y == MulticomplexNumber(n, recursive_product(xs, ys)));
    }
  }
}

TEST_CASE("multiply_by_unit matches full multiplication") {
  std::mt19937_64 rng(3);
  const auto x = test::random_element(4, rng);
  for (std::uint32_t m = 0; m < 16; ++m) {
    for (int s : {1, -1}) {
      const SignedUnit u{s, {m}};
      CHECK(multiply_by_unit(x, u) == x * MulticomplexNumber::unit(4, u));
    }
  }
}

TEST_CASE("to_string") {
  CHECK(lin(3, "1/2", {"i1", "i2", "-i1*i2*i3"}).to_string() == "1/2*i1 + 1/2*i2 - 1/2*i1*i2*i3");
  CHECK(MulticomplexNumber(2).to_string() == "0");
}
