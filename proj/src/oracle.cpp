#include "mcx/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mcx/error.hpp"
#include "mcx/idempotent.hpp"
#include "mcx/preserving.hpp"
#include "mcx/special_elements.hpp"

namespace mcx {

void VerificationReport::add(std::string check, bool ok, std::string detail) {
  passed = passed && ok;
  checks.push_back(CheckResult{std::move(check), ok, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) add(other.name + ": " + c.name, c.passed, c.detail);
}

BigCount brute_count_signed_r_involutions(int symbols, std::uint64_t r, std::uint64_t budget) {
  if (r < 1) throw DomainError("r must be >= 1");
  const std::uint64_t size = signed_permutation_count(symbols);
  if (size == 0 || size > budget) {
    throw BudgetExceeded("B_" + std::to_string(symbols) + " exceeds the enumeration budget of " + std::to_string(budget));
  }
  unsigned long count = 0;
  for (const SignedPermutation& p : SignedPermutations(symbols)) {
    if (p.power(r).is_identity()) ++count;
  }
  return BigCount(count);
}

BigCount brute_count_r_involutions(int n, std::uint64_t r, std::uint64_t budget) {
  require_order(n);
  if (n > 6) throw BudgetExceeded("brute force over B_{2^{n-1}} needs n <= 6");
  return brute_count_signed_r_involutions(static_cast<int>(idempotent_count(n)), r, budget);
}

BigCount brute_count_preserving_involutions(int n, std::uint64_t budget) {
  require_order(n);
  std::vector<SignedUnit> choices;
  for (std::uint32_t m = 1; m < unit_count(n); ++m) {
    if (__builtin_popcount(m) % 2 == 1) {
      choices.push_back(SignedUnit{1, UnitIndex{m}});
      choices.push_back(SignedUnit{-1, UnitIndex{m}});
    }
  }
  double total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<double>(choices.size());
  if (total > static_cast<double>(budget)) throw BudgetExceeded("too many unit image assignments for the budget");

  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<SignedUnit> images(static_cast<std::size_t>(n));
  unsigned long count = 0;
  while (true) {
    for (int j = 0; j < n; ++j) images[j] = choices[pick[j]];
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      // f(f(i_j)) = sign · Π_{k ∈ m_j} f(i_k).
      SignedUnit twice{images[j].sign, UnitIndex::one()};
      for (int k = 0; k < n; ++k) {
        if (images[j].unit.contains(k + 1)) twice = twice * images[k];
      }
      ok = twice == SignedUnit{1, UnitIndex::imaginary(j + 1)};
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < n && ++pick[pos] == choices.size()) pick[pos++] = 0;
    if (pos == n) break;
  }
  return BigCount(count);
}

VerificationReport verify_homomorphism(const RingMap& f, std::span<const MulticomplexNumber> samples) {
  VerificationReport report{"homomorphism", true, {}};
  if (samples.empty()) {
    report.add("samples", false, "no samples");
    return report;
  }
  const int n = samples.front().order();
  std::vector<MulticomplexNumber> images;
  images.reserve(samples.size());
  for (const auto& x : samples) images.push_back(f(x));

  if (f(MulticomplexNumber::one(n)) != MulticomplexNumber::one(n)) {
    report.add("unital", false, "f(1) = " + f(MulticomplexNumber::one(n)).to_string());
    return report;
  }
  const DyadicRational lambda = DyadicRational::parse("-3/4");
  for (std::size_t a = 0; a < samples.size(); ++a) {
    if (f(lambda * samples[a]) != lambda * images[a]) {
      report.add("real-linear", false, "x = " + samples[a].to_string() + ", lambda = -3/4");
      return report;
    }
    for (std::size_t b = a; b < samples.size(); ++b) {
      if (f(samples[a] * samples[b]) != images[a] * images[b]) {
        report.add("multiplicative", false, "x = " + samples[a].to_string() + ", y = " + samples[b].to_string());
        return report;
      }
      if (f(samples[a] + samples[b]) != images[a] + images[b]) {
        report.add("additive", false, "x = " + samples[a].to_string() + ", y = " + samples[b].to_string());
        return report;
      }
    }
  }
  report.add("unital", true);
  report.add("real-linear", true);
  report.add("multiplicative", true, std::to_string(samples.size()) + " samples");
  report.add("additive", true);
  return report;
}

VerificationReport verify_homomorphism(const Automorphism& f, std::span<const MulticomplexNumber> samples) {
  return verify_homomorphism(RingMap([&f](const MulticomplexNumber& x) { return f(x); }), samples);
}

std::vector<MulticomplexNumber> unit_samples(int n) {
  require_order(n);
  std::vector<MulticomplexNumber> out;
  for (std::uint32_t m = 0; m < unit_count(n); ++m) out.push_back(MulticomplexNumber::unit(n, UnitIndex{m}));
  return out;
}

std::vector<MulticomplexNumber> default_samples(int n, int dense, std::uint64_t seed) {
  auto out = unit_samples(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<std::uint32_t> exp(0, 3);
  for (int s = 0; s < dense; ++s) {
    std::vector<DyadicRational> c;
    for (std::size_t m = 0; m < unit_count(n); ++m) c.emplace_back(mpz_class(num(rng)), exp(rng));
    out.emplace_back(n, std::move(c));
  }
  return out;
}

VerificationReport verify_special_sets(int n) {
  VerificationReport report{"special", true, {}};
  if (n < 1 || n > 5) throw DomainError("special-set verification needs 1 <= n <= 5");
  const std::uint64_t expected = special_set_size(n);
  const std::pair<SpecialSetKind, const char*> kinds[] = {
      {SpecialSetKind::SquareMinusOne, "minus-one"}, {SpecialSetKind::SquareOne, "one"},
      {SpecialSetKind::Idempotent, "idempotent"}};
  std::vector<std::set<MulticomplexNumber>> sets;
  for (const auto& [kind, label] : kinds) {
    const auto elements = enumerate_special(kind, n);
    std::set<MulticomplexNumber> distinct(elements.begin(), elements.end());
    report.add(std::string(label) + " cardinality", distinct.size() == expected && elements.size() == expected,
               std::to_string(distinct.size()) + " distinct of " + std::to_string(elements.size()) + ", expected " +
                   std::to_string(expected));
    auto bad = std::find_if(elements.begin(), elements.end(), [&](const auto& x) { return !satisfies(kind, x); });
    report.add(std::string(label) + " equation", bad == elements.end(), bad == elements.end() ? "" : bad->to_string());
    sets.push_back(std::move(distinct));
  }
  const std::vector<MulticomplexNumber> h(sets[1].begin(), sets[1].end());
  const auto u = u_times(MulticomplexNumber::imaginary(n, 1), h);
  report.add("U = i1 H", std::set<MulticomplexNumber>(u.begin(), u.end()) == sets[0]);
  std::set<MulticomplexNumber> idem;
  for (const auto& x : h) idem.insert(idempotent_from_h(x));
  report.add("idempotents = (1 + H)/2", idem == sets[2]);
  return report;
}

namespace {

VerificationReport automorphisms_suite(int n) {
  VerificationReport report{"automorphisms", true, {}};
  std::uint64_t count = 0;
  if (n <= 3) {
    const auto units = unit_samples(n);
    const auto eps = basis_elements(n);
    const std::set<MulticomplexNumber> eps_set(eps.begin(), eps.end());
    std::string hom_failure, lemma_failure;
    for (const Automorphism& f : enumerate_automorphisms(n)) {
      ++count;
      if (hom_failure.empty()) {
        const auto r = verify_homomorphism(f, units);
        if (!r.passed) hom_failure = f.permutation().to_string() + " " + r.checks.back().detail;
      }
      for (const auto& e : eps) {
        if (lemma_failure.empty() && !eps_set.contains(f(e))) lemma_failure = f.permutation().to_string();
      }
    }
    report.add("homomorphism on unit pairs", hom_failure.empty(), hom_failure);
    report.add("f(E_n) = E_n", lemma_failure.empty(), lemma_failure);
  } else {
    for (const auto& p : SignedPermutations(static_cast<int>(idempotent_count(n)))) {
      (void)p;
      ++count;
    }
    report.add("per-element checks", true, "skipped for n > 3");
  }
  const BigCount formula = count_automorphisms(n);
  report.add("count", formula == BigCount(static_cast<unsigned long>(count)),
             std::to_string(count) + " enumerated, formula " + formula.get_str());
  return report;
}

VerificationReport involutions_suite(int n) {
  VerificationReport report{"involutions", true, {}};
  const BigCount brute = brute_count_r_involutions(n, 2);
  const BigCount formula = count_involutions(n);
  report.add("count", brute == formula, "brute " + brute.get_str() + ", formula " + formula.get_str());
  report.add("g recursion", g_sequence(idempotent_count(n)) == formula);
  if (n <= 3) {
    std::string failure;
    const MulticomplexNumber one = MulticomplexNumber::one(n);
    for (const Automorphism& f : enumerate_involutions(n)) {
      const MulticomplexNumber h = hyperbolic_part(f);
      if (square(h) != one || f(h) != h) {
        failure = f.permutation().to_string();
        break;
      }
    }
    report.add("fixed-point law", failure.empty(), failure);
  }
  return report;
}

VerificationReport r_involutions_suite(int n, std::uint64_t r) {
  VerificationReport report{"r-involutions", true, {}};
  const BigCount brute = brute_count_r_involutions(n, r);
  const BigCount formula = count_r_involutions(n, r);
  report.add("count r=" + std::to_string(r), brute == formula,
             "brute " + brute.get_str() + ", formula " + formula.get_str());
  if (is_odd_prime(r)) report.add("prime closed form", count_p_involutions(n, r) == formula);
  return report;
}

VerificationReport preserving_suite(int n) {
  VerificationReport report{"preserving", true, {}};
  std::uint64_t count = 0;
  std::string failure;
  const auto units = unit_samples(n);
  for_each_preserving_involution(n, [&](const PreservingInvolution& p) {
    ++count;
    if (!failure.empty()) return;
    const Automorphism& f = p.automorphism;
    if (!is_involution(f)) failure = "not an involution: " + f.permutation().to_string();
    if (!satisfies_matrix_conditions(p.matrix)) failure = "matrix conditions fail: " + f.permutation().to_string();
    if (2 * p.kernel_dimension < n) failure = "kernel dimension below n/2";
    for (const auto& img : unit_images(f)) {
      if (!is_plus_minus_elementary(img)) failure = "image outside ±I(n): " + img.to_string();
    }
    for (const auto& u : units) {
      if (f(f(u)) != u) failure = "f(f(u)) != u for u = " + u.to_string();
    }
  });
  const BigCount formula = count_preserving(n);
  report.add("count", BigCount(static_cast<unsigned long>(count)) == formula,
             std::to_string(count) + " generated, formula " + formula.get_str());
  report.add("per-involution checks", failure.empty(), failure);
  if (n <= 4) {
    const BigCount brute = brute_count_preserving_involutions(n);
    report.add("brute force", brute == formula, "brute " + brute.get_str());
  }
  return report;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int n, std::uint64_t r) {
  require_order(n);
  if (suite == "special") return verify_special_sets(n);
  if (suite == "automorphisms") return automorphisms_suite(n);
  if (suite == "involutions") return involutions_suite(n);
  if (suite == "r-involutions") return r_involutions_suite(n, r);
  if (suite == "preserving") return preserving_suite(n);
  if (suite == "all") {
    VerificationReport all{"all", true, {}};
    for (const char* name : {"special", "automorphisms", "involutions", "r-involutions", "preserving"}) {
      all.merge(run_suite(name, n, r));
    }
    return all;
  }
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace mcx
