#pragma once

#include <initializer_list>
#include <random>
#include <string>

#include "mcx/multicomplex.hpp"

namespace mcx::test {

// scale * (t1 + t2 + ...) with signed unit names such as "-i1*i2" or "+1".
inline MulticomplexNumber lin(int n, const std::string& scale, std::initializer_list<const char*> terms) {
  MulticomplexNumber x(n);
  for (const char* t : terms) x = x + MulticomplexNumber::unit(n, SignedUnit::parse(t));
  return DyadicRational::parse(scale) * x;
}

inline MulticomplexNumber random_element(int n, std::mt19937_64& rng, long span = 7, std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::vector<DyadicRational> c;
  for (std::size_t m = 0; m < unit_count(n); ++m) c.emplace_back(mpz_class(num(rng)), exp(rng));
  return MulticomplexNumber(n, std::move(c));
}

}  // namespace mcx::test
