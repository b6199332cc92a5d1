#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

namespace mcx {

/// Cycle type of a permutation: cycle length -> number of cycles of that length.
struct CycleType {
  std::map<int, int> multiplicities;

  int symbols() const;
  int count(int length) const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Element of the hyperoctahedral group B_N: a bijection π of {±1, ..., ±N}
/// with π(-i) = -π(i). Only the images of 1..N are stored.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Validates that |images| is a permutation of 1..N.
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int symbols);
  /// Parses "3,-2,4,1".
  static SignedPermutation parse(std::string_view text);

  int symbols() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// π(i) for i ∈ {±1..±N}.
  int operator()(int i) const { return i > 0 ? images_[i - 1] : -images_[-i - 1]; }

  /// (this ∘ other)(j) = this(other(j)).
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;
  /// r-fold composition, r >= 0.
  SignedPermutation power(std::uint64_t r) const;
  bool is_identity() const;

  /// Cycle type of the underlying unsigned permutation.
  CycleType cycle_type() const;
  /// Smallest t >= 1 with π^t = Id: lcm over cycles of s (sign product +1) or 2s (-1).
  std::uint64_t order() const;

  /// "3,-2,4,1".
  std::string to_string() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  friend class SignedPermutations;

  std::vector<int> images_;
};

/// |B_N| = 2^N N!, or 0 if that overflows 64 bits.
std::uint64_t signed_permutation_count(int symbols);

/// Input range over all of B_N: underlying permutations in lexicographic order,
/// and for each one the 2^N sign patterns in increasing order (bit i negates
/// the image of i+1).
class SignedPermutations : public std::ranges::view_interface<SignedPermutations> {
 public:
  SignedPermutations() = default;
  explicit SignedPermutations(int symbols);

  class iterator {
   public:
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    const SignedPermutation& operator*() const { return current_; }
    const SignedPermutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class SignedPermutations;
    explicit iterator(int symbols);
    void refresh();

    std::vector<int> base_;
    std::uint64_t signs_ = 0;
    SignedPermutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(symbols_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  static void assign(SignedPermutation& p, const std::vector<int>& base, std::uint64_t signs);

  int symbols_ = 1;
};

}  // namespace mcx
