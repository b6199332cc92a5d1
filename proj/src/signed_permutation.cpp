#include "mcx/signed_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "mcx/error.hpp"

namespace mcx {

int CycleType::symbols() const {
  int total = 0;
  for (const auto& [len, mult] : multiplicities) total += len * mult;
  return total;
}

int CycleType::count(int length) const {
  const auto it = multiplicities.find(length);
  return it == multiplicities.end() ? 0 : it->second;
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw DomainError("signed permutation needs at least one symbol");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (v == 0 || a > n || seen[a]) {
      throw DomainError("not a signed permutation of 1.." + std::to_string(n) + ": " + to_string());
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int symbols) {
  std::vector<int> im(static_cast<std::size_t>(symbols));
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> im;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw DomainError("malformed signed permutation: '" + std::string(text) + "'");
    }
    im.push_back(v);
    pos = end + 1;
  }
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (symbols() != other.symbols()) throw DimensionError("composing signed permutations of different length");
  std::vector<int> im(images_.size());
  for (int j = 1; j <= symbols(); ++j) im[j - 1] = (*this)(other(j));
  SignedPermutation r;
  r.images_ = std::move(im);
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int j = 1; j <= symbols(); ++j) {
    const int v = images_[j - 1];
    im[std::abs(v) - 1] = v > 0 ? j : -j;
  }
  SignedPermutation r;
  r.images_ = std::move(im);
  return r;
}

SignedPermutation SignedPermutation::power(std::uint64_t r) const {
  SignedPermutation result = identity(symbols());
  SignedPermutation base = *this;
  while (r > 0) {
    if (r & 1u) result = result.compose(base);
    base = base.compose(base);
    r >>= 1;
  }
  return result;
}

bool SignedPermutation::is_identity() const {
  for (int j = 1; j <= symbols(); ++j) {
    if (images_[j - 1] != j) return false;
  }
  return true;
}

CycleType SignedPermutation::cycle_type() const {
  CycleType t;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= symbols(); ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    for (int j = start; !seen[j - 1]; j = std::abs(images_[j - 1])) {
      seen[j - 1] = true;
      ++len;
    }
    ++t.multiplicities[len];
  }
  return t;
}

std::uint64_t SignedPermutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= symbols(); ++start) {
    if (seen[start - 1]) continue;
    std::uint64_t len = 0;
    int sign = 1;
    for (int j = start; !seen[j - 1]; j = std::abs(images_[j - 1])) {
      seen[j - 1] = true;
      if (images_[j - 1] < 0) sign = -sign;
      ++len;
    }
    result = std::lcm(result, sign > 0 ? len : 2 * len);
  }
  return result;
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

std::uint64_t signed_permutation_count(int symbols) {
  unsigned __int128 total = 1;
  for (int i = 1; i <= symbols; ++i) {
    total *= 2u * static_cast<unsigned>(i);
    if (total > ~std::uint64_t{0}) return 0;
  }
  return static_cast<std::uint64_t>(total);
}

SignedPermutations::SignedPermutations(int symbols) : symbols_(symbols) {
  if (symbols < 1 || symbols > 62) throw DomainError("B_N enumeration needs 1 <= N <= 62");
}

SignedPermutations::iterator::iterator(int symbols) : base_(static_cast<std::size_t>(symbols)), done_(false) {
  std::iota(base_.begin(), base_.end(), 1);
  refresh();
}

void SignedPermutations::assign(SignedPermutation& p, const std::vector<int>& base, std::uint64_t signs) {
  p.images_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) p.images_[i] = ((signs >> i) & 1u) ? -base[i] : base[i];
}

void SignedPermutations::iterator::refresh() { SignedPermutations::assign(current_, base_, signs_); }

SignedPermutations::iterator& SignedPermutations::iterator::operator++() {
  ++signs_;
  if (signs_ >> base_.size()) {
    signs_ = 0;
    if (!std::next_permutation(base_.begin(), base_.end())) {
      done_ = true;
      return *this;
    }
  }
  refresh();
  return *this;
}

}  // namespace mcx
