#include "mcx/counting.hpp"

#include <stdexcept>

#include "mcx/error.hpp"

namespace mcx {

namespace {

std::uint64_t symbols_for_order(int n) {
  if (n < 1 || n > kMaxCountingOrder) {
    throw DomainError("order must be in [1, " + std::to_string(kMaxCountingOrder) + "], got " +
                      std::to_string(n));
  }
  return std::uint64_t{1} << (n - 1);
}

BigCount factorial(std::uint64_t m) {
  BigCount f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

BigCount pow2(std::uint64_t e) {
  BigCount p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

void divide_exactly(BigCount& value, std::uint64_t divisor) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor)) {
    throw std::logic_error("count is not an integer at an intermediate step");
  }
  mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), divisor);
}

void visit_types(const std::vector<std::uint64_t>& parts, std::size_t idx, std::uint64_t left,
                 CycleType& current, const std::function<void(const CycleType&)>& visit) {
  if (idx == parts.size()) {
    if (left == 0) visit(current);
    return;
  }
  const std::uint64_t d = parts[idx];
  for (std::uint64_t m = 0; m * d <= left; ++m) {
    if (m > 0) current.multiplicities[static_cast<int>(d)] = static_cast<int>(m);
    visit_types(parts, idx + 1, left - m * d, current, visit);
  }
  current.multiplicities.erase(static_cast<int>(d));
}

}  // namespace

BigCount count_automorphisms(int n) {
  const std::uint64_t N = symbols_for_order(n);
  return pow2(N) * factorial(N);
}

BigCount count_involutions(int n) {
  const std::uint64_t N = symbols_for_order(n);
  // term_k = N! 2^{N-2k} / (k! (N-2k)!); term_{k+1} = term_k (N-2k)(N-2k-1) / (4(k+1)).
  BigCount term = pow2(N);
  BigCount total = term;
  for (std::uint64_t k = 0; 2 * k + 2 <= N; ++k) {
    term *= (N - 2 * k);
    term *= (N - 2 * k - 1);
    divide_exactly(term, 4 * (k + 1));
    total += term;
  }
  return total;
}

BigCount g_sequence(std::uint64_t m) {
  if (m < 1) throw DomainError("g_sequence needs m >= 1");
  BigCount prev = 2, cur = 6;
  if (m == 1) return prev;
  for (std::uint64_t i = 3; i <= m; ++i) {
    BigCount next = 2 * cur + BigCount(static_cast<unsigned long>(2 * i - 2)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

BigCount count_signed_p_involutions(std::uint64_t N, std::uint64_t p) {
  if (!is_odd_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (N < 1) throw DomainError("need at least one symbol");
  // term_k = N! 2^{(p-1)k} / (k! p^k (N-pk)!); term_0 = 1.
  BigCount term = 1;
  BigCount total = 1;
  for (std::uint64_t k = 0; p * (k + 1) <= N; ++k) {
    const std::uint64_t top = N - p * k;
    for (std::uint64_t i = 0; i < p; ++i) term *= (top - i);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), p - 1);
    divide_exactly(term, k + 1);
    divide_exactly(term, p);
    total += term;
  }
  return total;
}

BigCount count_p_involutions(int n, std::uint64_t p) {
  return count_signed_p_involutions(symbols_for_order(n), p);
}

BigCount permutations_with_cycle_type(const CycleType& t) {
  BigCount count = factorial(static_cast<std::uint64_t>(t.symbols()));
  BigCount denom = 1;
  for (const auto& [len, mult] : t.multiplicities) {
    BigCount lp;
    mpz_ui_pow_ui(lp.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(mult));
    denom *= lp * factorial(static_cast<std::uint64_t>(mult));
  }
  if (!mpz_divisible_p(count.get_mpz_t(), denom.get_mpz_t())) {
    throw std::logic_error("cycle-type class size is not an integer");
  }
  mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), denom.get_mpz_t());
  return count;
}

void for_each_cycle_type(std::uint64_t symbols, std::uint64_t r,
                         const std::function<void(const CycleType&)>& visit) {
  if (r < 1) throw DomainError("r must be >= 1");
  std::vector<std::uint64_t> parts;
  for (std::uint64_t d = 1; d <= r && d <= symbols; ++d) {
    if (r % d == 0) parts.push_back(d);
  }
  CycleType current;
  visit_types(parts, 0, symbols, current, visit);
}

BigCount count_signed_r_involutions(std::uint64_t N, std::uint64_t r) {
  if (N < 1) throw DomainError("need at least one symbol");
  if (r < 1) throw DomainError("r must be >= 1");
  BigCount total = 0;
  const BigCount all_signs = pow2(N);
  for_each_cycle_type(N, r, [&](const CycleType& t) {
    // Each cycle of length k with r/k odd needs sign product +1, halving its sign choices.
    std::uint64_t halvings = 0;
    for (const auto& [len, mult] : t.multiplicities) {
      if ((r / static_cast<std::uint64_t>(len)) % 2 == 1) halvings += static_cast<std::uint64_t>(mult);
    }
    BigCount weighted = all_signs * permutations_with_cycle_type(t);
    if (!mpz_divisible_2exp_p(weighted.get_mpz_t(), halvings)) {
      throw std::logic_error("2-power weight does not cancel");
    }
    mpz_tdiv_q_2exp(weighted.get_mpz_t(), weighted.get_mpz_t(), halvings);
    total += weighted;
  });
  return total;
}

BigCount count_r_involutions(int n, std::uint64_t r) { return count_signed_r_involutions(symbols_for_order(n), r); }

ExtendedReal log_count(const BigCount& value) {
  if (sgn(value) <= 0) throw DomainError("log_count needs a positive value");
  ExtendedReal x;
  mpfr_set_z(x.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return boost::multiprecision::log(x);
}

ExtendedReal asymptotic_log_estimate(int n) {
  symbols_for_order(n);
  const ExtendedReal two = 2;
  const ExtendedReal ln2 = boost::multiprecision::log(two);
  const ExtendedReal quarter_size = boost::multiprecision::pow(two, n - 2);
  const ExtendedReal root_term = boost::multiprecision::pow(two, ExtendedReal(n) / 2);
  return quarter_size * (n * ln2 - 1) + root_term - (ln2 + 1) / 2;
}

BigCount kernel_choice_count(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw DomainError("kernel_choice_count needs 0 <= k <= n, n >= 1");
  if (k <= 1) return 1;
  BigCount num = 1, den = 1;
  for (int j = 1; j <= k - 1; ++j) {
    num *= pow2(static_cast<std::uint64_t>(n)) - pow2(static_cast<std::uint64_t>(j));
    den *= pow2(static_cast<std::uint64_t>(k)) - pow2(static_cast<std::uint64_t>(j));
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("B(k,n) is not an integer");
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

BigCount range_choice_count(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw DomainError("range_choice_count needs 0 <= k <= n, n >= 1");
  BigCount d = 1;
  for (int j = 0; j <= n - k - 1; ++j) {
    d *= pow2(static_cast<std::uint64_t>(k)) - pow2(static_cast<std::uint64_t>(j));
  }
  return d;
}

BigCount count_preserving(int n) {
  if (n < 1 || n > 64) throw DomainError("count_preserving needs 1 <= n <= 64");
  BigCount total = 0;
  for (int k = (n + 1) / 2; k <= n; ++k) {
    total += kernel_choice_count(k, n) * range_choice_count(k, n) * pow2(static_cast<std::uint64_t>(k));
  }
  return total;
}

}  // namespace mcx
