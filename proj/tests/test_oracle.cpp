#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcx/counting.hpp"
#include "mcx/error.hpp"
#include "mcx/idempotent.hpp"
#include "mcx/oracle.hpp"

using namespace mcx;

TEST_CASE("brute force counts") {
  CHECK(brute_count_signed_involutions(4) == 76);
  CHECK(brute_count_signed_involutions(2) == 6);
  CHECK(brute_count_signed_involutions(5) == g_sequence(5));
  CHECK(brute_count_r_involutions(3, 3) == 33);
  CHECK(brute_count_r_involutions(3, 2) == 76);
  CHECK(brute_count_signed_r_involutions(1, 1) == 1);
  CHECK_THROWS_AS(brute_count_signed_involutions(9), BudgetExceeded);
}

TEST_CASE("homomorphism checks") {
  const auto samples = default_samples(3);
  CHECK(samples.size() == unit_count(3) + 4);
  CHECK(verify_homomorphism(Automorphism::identity(3), samples).passed);
  const auto units = unit_samples(3);
  for (const Automorphism& f : enumerate_automorphisms(3)) REQUIRE(verify_homomorphism(f, units).passed);

  // Negating the real part of one idempotent component is additive but not
  // multiplicative.
  const RingMap broken = [](const MulticomplexNumber& x) {
    const auto v = to_idempotent(x);
    std::vector<ComplexComponent> c(v.components().begin(), v.components().end());
    c[0].re = -c[0].re;
    return from_idempotent(IdempotentVector(x.order(), std::move(c)));
  };
  const auto report = verify_homomorphism(broken, samples);
  CHECK_FALSE(report.passed);
  bool named = false;
  for (const auto& c : report.checks) named |= !c.passed && !c.detail.empty();
  CHECK(named);
}

TEST_CASE("special sets and suites") {
  for (int n = 1; n <= 4; ++n) CHECK(verify_special_sets(n).passed);
  for (const char* suite : {"special", "automorphisms", "involutions", "r-involutions", "preserving", "all"}) {
    CAPTURE(suite);
    const auto report = run_suite(suite, 2, 3);
    CHECK(report.passed);
    CHECK_FALSE(report.checks.empty());
  }
  CHECK(run_suite("all", 3).passed);
  CHECK_THROWS_AS(run_suite("bogus", 2), DomainError);
}
