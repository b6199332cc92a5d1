#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mcx {

/// Bit vector over GF(2) of width <= 64; component i is bit i.
class GF2Vector {
 public:
  GF2Vector() = default;
  GF2Vector(int width, std::uint64_t bits);

  static GF2Vector zero(int width) { return GF2Vector(width, 0); }
  static GF2Vector all_ones(int width);
  static GF2Vector basis(int width, int i) { return GF2Vector(width, std::uint64_t{1} << i); }

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1u; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const { return __builtin_popcountll(bits_); }

  friend GF2Vector operator+(GF2Vector a, GF2Vector b);
  friend int dot(GF2Vector a, GF2Vector b) { return __builtin_popcountll(a.bits_ & b.bits_) & 1; }
  friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

  /// "0110" with component 0 first.
  std::string to_string() const;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Dense matrix over GF(2) with at most 64 columns, stored as row bit masks.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols);

  static GF2Matrix identity(int n);
  static GF2Matrix from_rows(int cols, std::span<const GF2Vector> rows);
  static GF2Matrix from_columns(int rows, std::span<const GF2Vector> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (data_[r] >> c) & 1u; }
  void set(int r, int c, bool value);
  GF2Vector row(int r) const { return GF2Vector(cols_, data_[r]); }
  GF2Vector column(int c) const;

  GF2Matrix transpose() const;
  /// Matrix-vector product M v.
  GF2Vector operator*(const GF2Vector& v) const;
  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend GF2Matrix operator+(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  /// Row-major 0/1 entries.
  std::vector<std::vector<int>> entries() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Subspace of GF(2)^width, stored by its reduced row echelon basis: each
/// basis vector's pivot is its lowest set bit, no other basis vector has that
/// bit, and vectors are sorted by pivot. The form is unique per subspace.
class GF2Subspace {
 public:
  explicit GF2Subspace(int width);
  /// Span of arbitrary (possibly dependent) vectors.
  static GF2Subspace span(int width, std::span<const GF2Vector> vectors);
  static GF2Subspace full(int width);

  int width() const { return width_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<GF2Vector>& basis() const { return basis_; }
  bool contains(const GF2Vector& v) const;

  /// Standard basis vectors e_i, scanned in increasing i, that extend the
  /// basis to all of GF(2)^width (the lexicographically smallest completion).
  std::vector<GF2Vector> complement_basis() const;

  friend auto operator<=>(const GF2Subspace&, const GF2Subspace&) = default;

 private:
  void insert(GF2Vector v);

  int width_;
  std::vector<GF2Vector> basis_;
};

int rank(const GF2Matrix& m);
/// {x : M x = 0}.
GF2Subspace kernel_basis(const GF2Matrix& m);
/// {M x}.
GF2Subspace column_space(const GF2Matrix& m);
GF2Matrix inverse(const GF2Matrix& m);
/// The unique X with A X = B for square invertible A; SingularSystem otherwise.
GF2Matrix solve(const GF2Matrix& a, const GF2Matrix& b);

/// All k-dimensional subspaces of GF(2)^width containing v, sorted by
/// canonical basis. With v = all-ones there are B(k, width) of them.
std::vector<GF2Subspace> enumerate_subspaces_containing(int width, int k, const GF2Vector& v);
inline std::vector<GF2Subspace> enumerate_subspaces_containing_e(int width, int k) {
  return enumerate_subspaces_containing(width, k, GF2Vector::all_ones(width));
}

}  // namespace mcx
