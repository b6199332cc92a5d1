#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "mcx/counting.hpp"
#include "mcx/error.hpp"
#include "mcx/gf2.hpp"

using namespace mcx;

namespace {

GF2Matrix from_bits(int rows, int cols, std::initializer_list<std::uint64_t> row_bits) {
  std::vector<GF2Vector> r;
  for (auto b : row_bits) r.emplace_back(cols, b);
  REQUIRE(static_cast<int>(r.size()) == rows);
  return GF2Matrix::from_rows(cols, r);
}

GF2Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::vector<GF2Vector> r;
  for (int i = 0; i < rows; ++i) r.emplace_back(cols, rng() & ((std::uint64_t{1} << cols) - 1));
  return GF2Matrix::from_rows(cols, r);
}

// A subspace of GF(2)^n as the set of its members, one bit per vector.
std::uint64_t member_mask(std::span<const std::uint64_t> generators) {
  std::uint64_t members = 1;  // the zero vector
  for (auto g : generators) {
    std::uint64_t grown = members;
    for (std::uint64_t v = 0; v < 64; ++v) {
      if ((members >> v) & 1u) grown |= std::uint64_t{1} << (v ^ g);
    }
    members = grown;
  }
  return members;
}

// Subspaces of GF(2)^n containing all-ones with dimension k, by brute force
// over generator tuples.
std::size_t brute_subspace_count(int n, int k) {
  std::set<std::uint64_t> seen;
  const std::uint64_t size = std::uint64_t{1} << n, e = size - 1;
  std::vector<std::uint64_t> gens(static_cast<std::size_t>(k));
  std::function<void(int)> pick = [&](int depth) {
    if (depth == k) {
      const std::uint64_t m = member_mask(gens);
      if (static_cast<int>(__builtin_popcountll(m)) == (1 << k) && ((m >> e) & 1u)) seen.insert(m);
      return;
    }
    for (std::uint64_t v = 1; v < size; ++v) {
      gens[depth] = v;
      pick(depth + 1);
    }
  };
  pick(0);
  return seen.size();
}

}  // namespace

TEST_CASE("vectors") {
  const GF2Vector a(4, 0b0110), b(4, 0b0011);
  CHECK((a + b).bits() == 0b0101);
  CHECK(dot(a, b) == 1);
  CHECK(a.to_string() == "0110");
  CHECK(GF2Vector::all_ones(5).weight() == 5);
  CHECK_THROWS_AS(GF2Vector(3, 0b1000), DomainError);
  CHECK_THROWS_AS(a + GF2Vector(3, 1), DimensionError);
}

TEST_CASE("rank, kernel and solve basics") {
  CHECK(rank(GF2Matrix::identity(3)) == 3);
  CHECK(kernel_basis(GF2Matrix(3, 3)).dimension() == 3);
  CHECK(kernel_basis(GF2Matrix::identity(3)).dimension() == 0);
  const GF2Matrix target = from_bits(3, 2, {0b01, 0b11, 0b10});
  CHECK(solve(GF2Matrix::identity(3), target) == target);
  const GF2Matrix singular = from_bits(2, 2, {0b11, 0b11});
  CHECK(rank(singular) == 1);
  CHECK_THROWS_AS(solve(singular, GF2Matrix::identity(2)), SingularSystem);
  CHECK_THROWS_AS(solve(GF2Matrix(2, 3), GF2Matrix(2, 1)), DimensionError);
}

TEST_CASE("random systems") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const GF2Matrix a = random_matrix(n, n, rng);
    const GF2Matrix b = random_matrix(n, 3, rng);
    const GF2Subspace ker = kernel_basis(a);
    REQUIRE(rank(a) + ker.dimension() == n);
    for (const auto& v : ker.basis()) REQUIRE((a * v).is_zero());
    if (rank(a) == n) {
      const GF2Matrix x = solve(a, b);
      REQUIRE(a * x == b);
      REQUIRE(a * inverse(a) == GF2Matrix::identity(n));
    } else {
      REQUIRE_THROWS_AS(solve(a, b), SingularSystem);
    }
    REQUIRE(a.transpose().transpose() == a);
    REQUIRE(rank(a.transpose()) == rank(a));
  }
}

TEST_CASE("canonical form is unique per subspace") {
  const int n = 5;
  const GF2Vector u(n, 0b00111), v(n, 0b01100), w(n, 0b11111);
  const std::vector<GF2Vector> first{u, v, w}, second{u + v, w, v + w};
  CHECK(GF2Subspace::span(n, first) == GF2Subspace::span(n, second));
  const auto s = GF2Subspace::span(n, first);
  CHECK(s.dimension() == 3);
  CHECK(s.contains(u + w));
  CHECK_FALSE(s.contains(GF2Vector(n, 0b00001)));
  for (std::size_t i = 0; i + 1 < s.basis().size(); ++i) {
    REQUIRE(__builtin_ctzll(s.basis()[i].bits()) < __builtin_ctzll(s.basis()[i + 1].bits()));
  }
  const auto complement = s.complement_basis();
  CHECK(complement.size() == 2);
  std::vector<GF2Vector> all = s.basis();
  all.insert(all.end(), complement.begin(), complement.end());
  CHECK(GF2Subspace::span(n, all).dimension() == n);
  for (const auto& c : complement) CHECK(c.weight() == 1);
}

TEST_CASE("subspaces containing the all-ones vector") {
  CHECK(enumerate_subspaces_containing_e(2, 1).size() == 1);
  CHECK(enumerate_subspaces_containing_e(3, 2).size() == 3);
  CHECK(enumerate_subspaces_containing_e(3, 3).size() == 1);
  CHECK(enumerate_subspaces_containing_e(2, 1).front().basis().front() == GF2Vector::all_ones(2));
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto subspaces = enumerate_subspaces_containing_e(n, k);
      const std::set<GF2Subspace> distinct(subspaces.begin(), subspaces.end());
      REQUIRE(distinct.size() == subspaces.size());
      for (const auto& s : subspaces) {
        REQUIRE(s.dimension() == k);
        REQUIRE(s.contains(GF2Vector::all_ones(n)));
      }
      CHECK(BigCount(static_cast<unsigned long>(subspaces.size())) == kernel_choice_count(k, n));
      if (n <= 4) CHECK(subspaces.size() == brute_subspace_count(n, k));
    }
  }
  CHECK(enumerate_subspaces_containing_e(3, 0).empty());
  CHECK_THROWS_AS(enumerate_subspaces_containing_e(3, 4), DomainError);
}
