#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include "mcx/signed_permutation.hpp"

namespace mcx {

using BigCount = mpz_class;
using ExtendedReal = boost::multiprecision::mpfr_float_100;

/// Largest n accepted by the B_{2^{n-1}}-based counts (2^{n-1} = 524288 symbols).
inline constexpr int kMaxCountingOrder = 20;

/// 2^{2^{n-1}} (2^{n-1})!.
BigCount count_automorphisms(int n);

/// F(n) = (2^{n-1})! Σ_{k=0}^{⌊2^{n-2}⌋} 2^{2^{n-1}-2k} / (k! (2^{n-1}-2k)!).
BigCount count_involutions(int n);

/// g(1) = 2, g(2) = 6, g(m) = 2 g(m-1) + (2m-2) g(m-2): signed involutions of length m.
BigCount g_sequence(std::uint64_t m);

bool is_odd_prime(std::uint64_t p);

/// F_p(n) for an odd prime p.
BigCount count_p_involutions(int n, std::uint64_t p);
/// Same closed form on B_N for arbitrary N.
BigCount count_signed_p_involutions(std::uint64_t symbols, std::uint64_t p);

/// F_r(n) = number of signed r-involutions of B_{2^{n-1}}.
BigCount count_r_involutions(int n, std::uint64_t r);

/// 2^N Σ_{σ ∈ S_{N,r}} Π_{k|r, r/k odd} 2^{-cyc_k(σ)}, summed over cycle types
/// (partitions of N into parts dividing r) weighted by N!/Π(k^{m_k} m_k!).
BigCount count_signed_r_involutions(std::uint64_t symbols, std::uint64_t r);

/// Number of permutations of t.symbols() elements with cycle type t.
BigCount permutations_with_cycle_type(const CycleType& t);

/// Calls visit for every cycle type on `symbols` elements whose cycle lengths
/// all divide r, in lexicographic order of the multiplicity vector.
void for_each_cycle_type(std::uint64_t symbols, std::uint64_t r,
                         const std::function<void(const CycleType&)>& visit);

/// Natural log of a positive count, to 100 decimal digits.
ExtendedReal log_count(const BigCount& value);

/// log of (2^n/e)^{2^{n-2}} e^{2^{n/2}} / sqrt(2e).
ExtendedReal asymptotic_log_estimate(int n);

/// B(k,n): k-dimensional subspaces of GF(2)^n containing the all-ones vector
/// (1 for k = 0, 1).
BigCount kernel_choice_count(int k, int n);
/// D(k,n) = Π_{j=0}^{n-k-1} (2^k - 2^j).
BigCount range_choice_count(int k, int n);
/// Σ_{k=⌈n/2⌉}^{n} B(k,n) D(k,n) 2^k.
BigCount count_preserving(int n);

}  // namespace mcx
