#include "mcx/gf2.hpp"

#include <algorithm>

#include "mcx/error.hpp"

namespace mcx {

namespace {

std::uint64_t low_mask(int width) { return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1; }

void require_width(int width) {
  if (width < 0 || width > 64) throw DomainError("GF(2) width must be in [0, 64]");
}

}  // namespace

GF2Vector::GF2Vector(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  require_width(width);
  if (bits & ~low_mask(width)) throw DomainError("GF(2) vector has bits beyond its width");
}

GF2Vector GF2Vector::all_ones(int width) { return GF2Vector(width, low_mask(width)); }

GF2Vector operator+(GF2Vector a, GF2Vector b) {
  if (a.width_ != b.width_) throw DimensionError("GF(2) vector widths differ");
  return GF2Vector(a.width_, a.bits_ ^ b.bits_);
}

std::string GF2Vector::to_string() const {
  std::string s;
  for (int i = 0; i < width_; ++i) s += (*this)[i] ? '1' : '0';
  return s;
}

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows), 0) {
  require_width(cols);
  if (rows < 0) throw DomainError("negative row count");
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i] = std::uint64_t{1} << i;
  return m;
}

GF2Matrix GF2Matrix::from_rows(int cols, std::span<const GF2Vector> rows) {
  GF2Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].width() != cols) throw DimensionError("row width mismatch");
    m.data_[r] = rows[r].bits();
  }
  return m;
}

GF2Matrix GF2Matrix::from_columns(int rows, std::span<const GF2Vector> cols) {
  GF2Matrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].width() != rows) throw DimensionError("column height mismatch");
    for (int r = 0; r < rows; ++r) m.set(r, static_cast<int>(c), cols[c][r]);
  }
  return m;
}

void GF2Matrix::set(int r, int c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << c;
  data_[r] = value ? (data_[r] | bit) : (data_[r] & ~bit);
}

GF2Vector GF2Matrix::column(int c) const {
  std::uint64_t bits = 0;
  for (int r = 0; r < rows_; ++r) bits |= static_cast<std::uint64_t>(get(r, c)) << r;
  return GF2Vector(rows_, bits);
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (get(r, c)) t.data_[c] |= std::uint64_t{1} << r;
    }
  }
  return t;
}

GF2Vector GF2Matrix::operator*(const GF2Vector& v) const {
  if (v.width() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  std::uint64_t out = 0;
  for (int r = 0; r < rows_; ++r) out |= static_cast<std::uint64_t>(__builtin_popcountll(data_[r] & v.bits()) & 1) << r;
  return GF2Vector(rows_, out);
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  GF2Matrix p(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    std::uint64_t acc = 0;
    for (int k = 0; k < a.cols_; ++k) {
      if (a.get(r, k)) acc ^= b.data_[k];
    }
    p.data_[r] = acc;
  }
  return p;
}

GF2Matrix operator+(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum dimension mismatch");
  GF2Matrix s = a;
  for (int r = 0; r < a.rows_; ++r) s.data_[r] ^= b.data_[r];
  return s;
}

std::vector<std::vector<int>> GF2Matrix::entries() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_), std::vector<int>(static_cast<std::size_t>(cols_)));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r][c] = get(r, c);
  }
  return out;
}

GF2Subspace::GF2Subspace(int width) : width_(width) { require_width(width); }

void GF2Subspace::insert(GF2Vector v) {
  std::uint64_t x = v.bits();
  for (const auto& b : basis_) {
    const std::uint64_t pivot = b.bits() & (~b.bits() + 1);
    if (x & pivot) x ^= b.bits();
  }
  if (x == 0) return;
  const std::uint64_t pivot = x & (~x + 1);
  for (auto& b : basis_) {
    if (b.bits() & pivot) b = GF2Vector(width_, b.bits() ^ x);
  }
  basis_.emplace_back(width_, x);
  std::sort(basis_.begin(), basis_.end(), [](const GF2Vector& a, const GF2Vector& b) {
    return __builtin_ctzll(a.bits()) < __builtin_ctzll(b.bits());
  });
}

GF2Subspace GF2Subspace::span(int width, std::span<const GF2Vector> vectors) {
  GF2Subspace s(width);
  for (const auto& v : vectors) {
    if (v.width() != width) throw DimensionError("vector width differs from subspace width");
    s.insert(v);
  }
  return s;
}

GF2Subspace GF2Subspace::full(int width) {
  GF2Subspace s(width);
  for (int i = 0; i < width; ++i) s.basis_.push_back(GF2Vector::basis(width, i));
  return s;
}

bool GF2Subspace::contains(const GF2Vector& v) const {
  if (v.width() != width_) throw DimensionError("vector width differs from subspace width");
  std::uint64_t x = v.bits();
  for (const auto& b : basis_) {
    if (x & b.bits() & (~b.bits() + 1)) x ^= b.bits();
  }
  return x == 0;
}

std::vector<GF2Vector> GF2Subspace::complement_basis() const {
  GF2Subspace grown = *this;
  std::vector<GF2Vector> extra;
  for (int i = 0; i < width_ && grown.dimension() < width_; ++i) {
    const GF2Vector e = GF2Vector::basis(width_, i);
    if (!grown.contains(e)) {
      grown.insert(e);
      extra.push_back(e);
    }
  }
  return extra;
}

GF2Subspace kernel_basis(const GF2Matrix& m) {
  // Eliminate on the columns of [M; I]: a column whose M part vanishes
  // carries a kernel vector in its I part.
  const int n = m.cols();
  std::vector<std::uint64_t> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    top[c] = m.column(c).bits();
    bottom[c] = std::uint64_t{1} << c;
  }
  int next = 0;
  for (int r = 0; r < m.rows() && next < n; ++r) {
    int pivot = -1;
    for (int c = next; c < n; ++c) {
      if ((top[c] >> r) & 1u) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(top[next], top[pivot]);
    std::swap(bottom[next], bottom[pivot]);
    for (int c = 0; c < n; ++c) {
      if (c != next && ((top[c] >> r) & 1u)) {
        top[c] ^= top[next];
        bottom[c] ^= bottom[next];
      }
    }
    ++next;
  }
  std::vector<GF2Vector> kernel;
  for (int c = next; c < n; ++c) kernel.emplace_back(n, bottom[c]);
  return GF2Subspace::span(n, kernel);
}

GF2Subspace column_space(const GF2Matrix& m) {
  std::vector<GF2Vector> cols;
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return GF2Subspace::span(m.rows(), cols);
}

int rank(const GF2Matrix& m) { return column_space(m).dimension(); }

GF2Matrix solve(const GF2Matrix& a, const GF2Matrix& b) {
  const int n = a.rows();
  if (a.cols() != n) throw DimensionError("solve needs a square coefficient matrix");
  if (b.rows() != n) throw DimensionError("right-hand side has the wrong number of rows");
  std::vector<std::uint64_t> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    lhs[r] = a.row(r).bits();
    rhs[r] = b.row(r).bits();
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if ((lhs[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularSystem("coefficient matrix is singular over GF(2)");
    std::swap(lhs[c], lhs[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != c && ((lhs[r] >> c) & 1u)) {
        lhs[r] ^= lhs[c];
        rhs[r] ^= rhs[c];
      }
    }
  }
  std::vector<GF2Vector> rows;
  for (int r = 0; r < n; ++r) rows.emplace_back(b.cols(), rhs[r]);
  return GF2Matrix::from_rows(b.cols(), rows);
}

GF2Matrix inverse(const GF2Matrix& m) { return solve(m, GF2Matrix::identity(m.rows())); }

std::vector<GF2Subspace> enumerate_subspaces_containing(int width, int k, const GF2Vector& v) {
  require_width(width);
  if (k < 0 || k > width) throw DomainError("subspace dimension out of range");
  if (v.width() != width) throw DimensionError("vector width differs from ambient width");
  std::vector<GF2Subspace> out;
  // Every subspace has one RREF basis: choose the pivot columns, then the free
  // entries of each row (columns above its pivot that are not pivots).
  for (std::uint64_t pivots = 0; pivots <= low_mask(width); ++pivots) {
    if (__builtin_popcountll(pivots) != k) {
      if (pivots == low_mask(width)) break;
      continue;
    }
    std::vector<int> pivot_cols;
    for (int i = 0; i < width; ++i) {
      if ((pivots >> i) & 1u) pivot_cols.push_back(i);
    }
    std::vector<std::vector<int>> free_cols(pivot_cols.size());
    int free_total = 0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      for (int c = pivot_cols[r] + 1; c < width; ++c) {
        if (!((pivots >> c) & 1u)) free_cols[r].push_back(c);
      }
      free_total += static_cast<int>(free_cols[r].size());
    }
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_total); ++fill) {
      std::vector<GF2Vector> rows;
      int bit = 0;
      for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        std::uint64_t row = std::uint64_t{1} << pivot_cols[r];
        for (int c : free_cols[r]) {
          if ((fill >> bit++) & 1u) row |= std::uint64_t{1} << c;
        }
        rows.emplace_back(width, row);
      }
      GF2Subspace s = GF2Subspace::span(width, rows);
      if (s.contains(v)) out.push_back(std::move(s));
    }
    if (pivots == low_mask(width)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcx
