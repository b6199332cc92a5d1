#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mcx/automorphism.hpp"
#include "mcx/counting.hpp"
#include "mcx/multicomplex.hpp"

namespace mcx {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::vector<CheckResult> checks;

  void add(std::string check, bool ok, std::string detail = {});
  void merge(const VerificationReport& other);
};

/// Counts π ∈ B_{2^{n-1}} with π^r = Id by composing r times.
BigCount brute_count_r_involutions(int n, std::uint64_t r, std::uint64_t budget = kDefaultEnumerationBudget);
/// Same on B_N for arbitrary N.
BigCount brute_count_signed_r_involutions(int symbols, std::uint64_t r,
                                          std::uint64_t budget = kDefaultEnumerationBudget);
inline BigCount brute_count_signed_involutions(int symbols, std::uint64_t budget = kDefaultEnumerationBudget) {
  return brute_count_signed_r_involutions(symbols, 2, budget);
}

/// Counts assignments i_j -> ±i^m (m of odd weight) whose induced ring map
/// satisfies f(f(i_j)) = i_j, multiplying units directly.
BigCount brute_count_preserving_involutions(int n, std::uint64_t budget = kDefaultEnumerationBudget);

using RingMap = std::function<MulticomplexNumber(const MulticomplexNumber&)>;

/// Checks f(1) = 1, f(xy) = f(x)f(y), f(x+y) = f(x)+f(y) and f(λx) = λf(x)
/// on all pairs of samples. Stops at the first failure and names the witnesses.
VerificationReport verify_homomorphism(const RingMap& f, std::span<const MulticomplexNumber> samples);
VerificationReport verify_homomorphism(const Automorphism& f, std::span<const MulticomplexNumber> samples);

/// The 2^n canonical units of MC(n).
std::vector<MulticomplexNumber> unit_samples(int n);
/// Units plus `dense` random elements with small dyadic coefficients.
std::vector<MulticomplexNumber> default_samples(int n, int dense = 4, std::uint64_t seed = 20240611);

VerificationReport verify_special_sets(int n);

/// Suites: special, automorphisms, involutions, r-involutions, preserving, all.
VerificationReport run_suite(const std::string& suite, int n, std::uint64_t r = 2);

}  // namespace mcx
