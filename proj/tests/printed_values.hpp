#pragma once

// Values printed in the literature for MC(3), written out by hand.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcx/automorphism.hpp"
#include "mcx/preserving.hpp"
#include "support.hpp"

namespace mcx::test {

using Set = std::set<MulticomplexNumber>;

inline Set as_set(const std::vector<MulticomplexNumber>& v) { return Set(v.begin(), v.end()); }

inline Set with_negatives(std::initializer_list<MulticomplexNumber> xs) {
  Set s;
  for (const auto& x : xs) {
    s.insert(x);
    s.insert(-x);
  }
  return s;
}

// The three 16-element lists printed for n = 3.
inline Set printed_u3() {
  return with_negatives({lin(3, "1", {"i1"}), lin(3, "1", {"i2"}), lin(3, "1", {"i3"}), lin(3, "1", {"i1*i2*i3"}),
                         lin(3, "1/2", {"i1", "i2", "i3", "i1*i2*i3"}), lin(3, "1/2", {"i1", "-i2", "-i3", "i1*i2*i3"}),
                         lin(3, "1/2", {"i1", "i2", "-i3", "-i1*i2*i3"}), lin(3, "1/2", {"i1", "-i2", "i3", "-i1*i2*i3"})});
}

inline Set printed_h3() {
  return with_negatives({lin(3, "1", {"1"}), lin(3, "1", {"i1*i2"}), lin(3, "1", {"i1*i3"}), lin(3, "1", {"i2*i3"}),
                         lin(3, "1/2", {"1", "i1*i2", "i1*i3", "i2*i3"}), lin(3, "1/2", {"1", "-i1*i2", "-i1*i3", "i2*i3"}),
                         lin(3, "1/2", {"1", "i1*i2", "-i1*i3", "-i2*i3"}), lin(3, "1/2", {"1", "-i1*i2", "i1*i3", "-i2*i3"})});
}

inline Set printed_e3() {
  const auto three = lin(3, "3/4", {"1"});
  return {lin(3, "1", {"1"}), MulticomplexNumber(3), lin(3, "1/2", {"1", "i1*i2"}), lin(3, "1/2", {"1", "-i1*i2"}),
          lin(3, "1/2", {"1", "i1*i3"}), lin(3, "1/2", {"1", "-i1*i3"}), lin(3, "1/2", {"1", "i2*i3"}),
          lin(3, "1/2", {"1", "-i2*i3"}),
          three + lin(3, "1/4", {"i1*i2", "i1*i3", "i2*i3"}), lin(3, "1/4", {"1", "-i1*i2", "-i1*i3", "-i2*i3"}),
          three + lin(3, "1/4", {"-i1*i2", "-i1*i3", "i2*i3"}), lin(3, "1/4", {"1", "i1*i2", "i1*i3", "-i2*i3"}),
          three + lin(3, "1/4", {"i1*i2", "-i1*i3", "-i2*i3"}), lin(3, "1/4", {"1", "-i1*i2", "i1*i3", "i2*i3"}),
          three + lin(3, "1/4", {"-i1*i2", "i1*i3", "-i2*i3"}), lin(3, "1/4", {"1", "i1*i2", "-i1*i3", "i2*i3"})};
}

// ε_1..ε_4 as displayed for the n = 3 worked example.
inline std::vector<MulticomplexNumber> printed_eps() {
  return {lin(3, "1/4", {"1", "-i1*i2", "-i1*i3", "-i2*i3"}), lin(3, "1/4", {"1", "i1*i2", "i1*i3", "-i2*i3"}),
          lin(3, "1/4", {"1", "-i1*i2", "i1*i3", "i2*i3"}), lin(3, "1/4", {"1", "i1*i2", "-i1*i3", "i2*i3"})};
}

// Translates a permutation written in the printed labels into internal
// symbols by matching idempotents by value.
inline SignedPermutation internal_from_printed(const SignedPermutation& printed) {
  const auto eps = printed_eps();
  const auto internal = basis_elements(3);
  std::vector<int> index(4);
  for (int k = 0; k < 4; ++k) {
    const auto it = std::find(internal.begin(), internal.end(), eps[k]);
    if (it == internal.end()) throw std::logic_error("printed idempotent not in E_3");
    index[k] = static_cast<int>(it - internal.begin()) + 1;
  }
  std::vector<int> images(4);
  for (int k = 1; k <= 4; ++k) {
    const int v = printed(k);
    images[index[k - 1] - 1] = v > 0 ? index[v - 1] : -index[-v - 1];
  }
  return SignedPermutation(images);
}

inline MulticomplexNumber unit3(const char* name) { return MulticomplexNumber::unit(3, SignedUnit::parse(name)); }

inline Automorphism from_generators(const char* a, const char* b, const char* c) {
  const std::vector<SignedUnit> images{SignedUnit::parse(a), SignedUnit::parse(b), SignedUnit::parse(c)};
  return unit_images_to_automorphism(images, 3);
}

// The four explicit I(3)-preserving involutions, as the image of every basis unit.
using UnitMap = std::vector<std::pair<const char*, const char*>>;

inline const std::vector<UnitMap>& sample_involutions() {
  static const std::vector<UnitMap> samples{
      {{"1", "1"}, {"i1", "-i1"}, {"i2", "-i2"}, {"i1*i2", "i1*i2"},
       {"i1*i2*i3", "i3"}, {"i2*i3", "i1*i3"}, {"i1*i3", "i2*i3"}, {"i3", "i1*i2*i3"}},
      {{"1", "1"}, {"i1", "-i1"}, {"i2", "-i2"}, {"i1*i2", "i1*i2"},
       {"i1*i2*i3", "-i3"}, {"i2*i3", "-i1*i3"}, {"i1*i3", "-i2*i3"}, {"i3", "-i1*i2*i3"}},
      {{"1", "1"}, {"i1", "i1"}, {"i3", "i2"}, {"i1*i3", "i1*i2"},
       {"i2", "i3"}, {"i1*i2", "i1*i3"}, {"i2*i3", "i2*i3"}, {"i1*i2*i3", "i1*i2*i3"}},
      // The printed list has -η_{i1i3} on i1i3, which repeats the i1i2 term; the
      // coefficient that makes it a ring map is η_{i1i2}.
      {{"1", "1"}, {"i1", "i1"}, {"i3", "-i2"}, {"i1*i3", "-i1*i2"},
       {"i2", "-i3"}, {"i1*i2", "-i1*i3"}, {"i2*i3", "i2*i3"}, {"i1*i2*i3", "i1*i2*i3"}},
  };
  return samples;
}

inline bool acts_as(const Automorphism& f, const UnitMap& map) {
  for (const auto& [from, to] : map) {
    if (f(unit3(from)) != unit3(to)) return false;
  }
  return true;
}

}  // namespace mcx::test
