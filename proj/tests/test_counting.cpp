#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcx/counting.hpp"
#include "mcx/error.hpp"
#include "mcx/oracle.hpp"

using namespace mcx;

namespace {

BigCount big(const char* s) { return BigCount(s); }

// Direct sum over k of the closed form, with exact rationals.
BigCount involutions_by_rationals(int n) {
  const unsigned long N = 1ul << (n - 1);
  mpq_class sum = 0;
  for (unsigned long k = 0; 2 * k <= N; ++k) {
    mpz_class fk, fr, p;
    mpz_fac_ui(fk.get_mpz_t(), k);
    mpz_fac_ui(fr.get_mpz_t(), N - 2 * k);
    mpz_ui_pow_ui(p.get_mpz_t(), 2, N - 2 * k);
    sum += mpq_class(p, fk * fr);
  }
  mpz_class fN;
  mpz_fac_ui(fN.get_mpz_t(), N);
  sum *= fN;
  REQUIRE(sum.get_den() == 1);
  return sum.get_num();
}

}  // namespace

TEST_CASE("automorphism counts") {
  CHECK(count_automorphisms(1) == 2);
  CHECK(count_automorphisms(2) == 8);
  CHECK(count_automorphisms(3) == 384);
  CHECK(count_automorphisms(4) == 10321920);
}

TEST_CASE("involution table") {
  CHECK(count_involutions(1) == 2);
  CHECK(count_involutions(2) == 6);
  CHECK(count_involutions(3) == 76);
  CHECK(count_involutions(4) == 32400);
  CHECK(count_involutions(5) == big("50305536256"));
  for (int n = 1; n <= 9; ++n) CHECK(count_involutions(n) == involutions_by_rationals(n));
  for (int n = 1; n <= 7; ++n) CHECK(count_involutions(n + 1) > count_involutions(n));
}

TEST_CASE("g recursion") {
  CHECK(g_sequence(1) == 2);
  CHECK(g_sequence(2) == 6);
  CHECK(g_sequence(3) == 20);
  CHECK(g_sequence(4) == 76);
  for (int n = 1; n <= 8; ++n) CHECK(g_sequence(1ul << (n - 1)) == count_involutions(n));
  CHECK_THROWS_AS(g_sequence(0), DomainError);
}

TEST_CASE("p-involutions") {
  CHECK(count_p_involutions(2, 3) == 1);
  CHECK(count_p_involutions(3, 3) == 33);
  CHECK(count_p_involutions(1, 5) == 1);
  CHECK(count_p_involutions(3, 5) == 1);
  CHECK_THROWS_AS(count_p_involutions(3, 2), DomainError);
  CHECK_THROWS_AS(count_p_involutions(3, 9), DomainError);
  CHECK(is_odd_prime(7));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_FALSE(is_odd_prime(15));
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t p : {3, 5, 7}) CHECK(count_r_involutions(n, p) == count_p_involutions(n, p));
  }
}

TEST_CASE("r-involutions") {
  for (int n = 1; n <= 5; ++n) CHECK(count_r_involutions(n, 2) == count_involutions(n));
  CHECK(count_r_involutions(3, 3) == 33);
  CHECK(count_r_involutions(3, 1) == 1);
  for (std::uint64_t r = 1; r <= 12; ++r) CHECK(count_r_involutions(3, r) == brute_count_r_involutions(3, r));
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t r : {2, 3}) {
      for (std::uint64_t m : {2, 3}) CHECK(count_r_involutions(n, r) <= count_r_involutions(n, m * r));
    }
    CHECK(count_r_involutions(n, 5) <= count_automorphisms(n));
  }
  CHECK_THROWS_AS(count_r_involutions(3, 0), DomainError);
}

TEST_CASE("signed r-involutions on B_N") {
  CHECK(count_signed_r_involutions(2, 2) == 6);
  CHECK(count_signed_r_involutions(4, 2) == 76);
  for (int N = 1; N <= 5; ++N) {
    for (std::uint64_t r = 1; r <= 6; ++r) CHECK(count_signed_r_involutions(N, r) == brute_count_signed_r_involutions(N, r));
    CHECK(count_signed_r_involutions(N, 2) == g_sequence(N));
  }
  for (int n = 1; n <= 5; ++n) CHECK(count_r_involutions(n, 4) == count_signed_r_involutions(1ul << (n - 1), 4));
  CHECK(count_signed_p_involutions(6, 3) == count_signed_r_involutions(6, 3));
}

TEST_CASE("cycle types") {
  CycleType t;
  t.multiplicities = {{1, 2}, {3, 1}};
  CHECK(permutations_with_cycle_type(t) == 20);
  std::vector<CycleType> seen;
  for_each_cycle_type(4, 2, [&](const CycleType& c) { seen.push_back(c); });
  CHECK(seen.size() == 3);
  BigCount total = 0;
  for_each_cycle_type(6, 6, [&](const CycleType& c) { total += permutations_with_cycle_type(c); });
  // S_6 minus the types 5+1 (144), 4+1+1 (90) and 4+2 (90).
  CHECK(total == 396);
}

TEST_CASE("asymptotic estimate improves monotonically") {
  ExtendedReal previous = -1;
  for (int n = 3; n <= 8; ++n) {
    const ExtendedReal gap = abs(log_count(count_involutions(n)) - asymptotic_log_estimate(n));
    if (n > 3) CHECK(gap < previous);
    previous = gap;
  }
  // At n = 3 the estimate is about 62.85, so F(3) = 76 is 1.21 times larger.
  const ExtendedReal ratio = exp(log_count(76) - asymptotic_log_estimate(3));
  CHECK(ratio > 1.20);
  CHECK(ratio < 1.22);
}

TEST_CASE("preserving counts") {
  CHECK(count_preserving(1) == 2);
  CHECK(count_preserving(2) == 6);
  CHECK(count_preserving(3) == 44);
  CHECK(kernel_choice_count(2, 3) == 3);
  CHECK(range_choice_count(2, 3) == 3);
  CHECK(kernel_choice_count(1, 5) == 1);
  CHECK(kernel_choice_count(0, 5) == 1);
  CHECK(range_choice_count(3, 3) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(count_preserving(n) <= count_involutions(n));
  CHECK(count_preserving(4) == 576);
  CHECK(count_preserving(5) == 15392);
}
