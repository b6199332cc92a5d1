#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mcx/automorphism.hpp"
#include "mcx/gf2.hpp"
#include "mcx/multicomplex.hpp"

namespace mcx {

/// Default cap on the number of emitted preserving involutions (n <= 6).
inline constexpr std::uint64_t kDefaultPreservingBudget = std::uint64_t{1} << 22;

/// Sign that makes i^m an involution-friendly representative of its class:
/// (-1)^{⌊|m|/2⌋}, which is (-1)^{(|m|-1)/2} for odd |m|.
int reversion_sign(UnitIndex m);

/// A ±I(n)-preserving involution together with the GF(2) data that produced it.
///
/// The (n+1)x(n+1) matrix A has, in column j < n, the exponent bits of f(i_{j+1})
/// in rows 0..n-1 and the sign bit w_j in row n, where
/// f(i_{j+1}) = (-1)^{w_j} reversion_sign(m_j) i^{m_j}. The last column is e_{n+1}.
struct PreservingInvolution {
  int order = 0;
  int kernel_dimension = 0;
  GF2Subspace kernel{0};
  /// Y^T v_j for the fixed complement basis v_1..v_{n-k}.
  std::vector<GF2Vector> range_images;
  GF2Vector sign_row;
  /// Y = M - I where M is the top-left n x n block of A.
  GF2Matrix y;
  GF2Matrix matrix;
  std::vector<SignedUnit> unit_images;
  Automorphism automorphism = Automorphism::identity(1);
};

/// Ordered tuples (s_1, ..., s_{n-k}) of linearly independent vectors of the
/// kernel, in lexicographic order of their coordinates over kernel.basis().
/// There are D(k, n) of them.
std::vector<std::vector<GF2Vector>> admissible_range_images(const GF2Subspace& kernel);

/// The Y with ker(Y^T) = kernel and Y^T v_j = s_j for the complement basis.
GF2Matrix preserving_y_matrix(const GF2Subspace& kernel, std::span<const GF2Vector> range_images);

/// Every w with w^T Y = 0, found by scanning all of GF(2)^n (2^k of them).
std::vector<GF2Vector> admissible_sign_rows(const GF2Matrix& y);

/// A from signed unit images; throws DomainError on an even-weight image.
GF2Matrix involution_matrix(std::span<const SignedUnit> images);
/// Signed unit images read back from A.
std::vector<SignedUnit> images_from_matrix(const GF2Matrix& a);

/// A^2 ≡ I, A^T (e,0) ≡ (e,0), last column e_{n+1}.
bool satisfies_matrix_conditions(const GF2Matrix& a);

/// The ring automorphism with f(i_j) = images[j-1]; each image must be an
/// odd-weight signed unit. The signed permutation is read off from f(i1 ε_j).
Automorphism unit_images_to_automorphism(std::span<const SignedUnit> images, int n);
/// Same for arbitrary images (each must square to -1).
Automorphism automorphism_from_images(std::span<const MulticomplexNumber> images);

/// Visits every preserving involution of MC(n) in canonical order: kernel
/// dimension, kernel canonical form, range images, sign row.
void for_each_preserving_involution(int n, const std::function<void(const PreservingInvolution&)>& visit,
                                    std::uint64_t budget = kDefaultPreservingBudget);
std::vector<PreservingInvolution> enumerate_preserving_involutions(int n,
                                                                   std::uint64_t budget = kDefaultPreservingBudget);

}  // namespace mcx
