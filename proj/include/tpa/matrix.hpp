#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "tpa/scalar.hpp"

namespace tpa {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix of exact scalars, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Adds c * b into the block at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& c = Scalar(1));

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RowReduction {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form.
RowReduction row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that
/// column and 0 in the other free columns.
std::vector<Vector> kernel(const Matrix& m);

struct LinearSolution {
  bool consistent = false;
  Vector particular;            // free variables set to zero
  std::vector<Vector> kernel;
};

/// Solves m x = b. Throws InputError on dimension mismatch.
LinearSolution solve_linear(const Matrix& m, const Vector& b);

Matrix kronecker(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

bool is_zero_vector(const Vector& v);
Vector add_scaled(Vector a, const Vector& b, const Scalar& c);

/// Coordinates with respect to a fixed linearly independent family.
///
/// Built once; coordinates(v) is cheap afterwards. Vectors outside the span
/// yield std::nullopt.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(const std::vector<Vector>& basis, std::size_t ambient_dim);

  std::size_t dim() const { return basis_size_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

 private:
  std::size_t basis_size_ = 0;
  std::size_t ambient_ = 0;
  Matrix reduced_;        // rank x ambient, RREF of the basis rows
  Matrix transform_;      // rank x basis_size, reduced_ = transform_ * basis
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained echelon basis of a subspace; used for greedy
/// independence tests.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  /// Adds v if independent of the current span; returns whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// v reduced modulo the span (zero iff v is in the span).
  Vector reduce(Vector v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;              // each with leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

/// Quotient of k^n by the span of the given vectors. The quotient basis is
/// the set of non-pivot coordinates of the RREF of the span.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const std::vector<Vector>& relations, std::size_t ambient_dim);

  std::size_t dim() const { return free_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  /// Ambient coordinate used as representative of quotient basis vector i.
  std::size_t representative(std::size_t i) const { return free_[i]; }
  /// Image of ambient basis vector j in quotient coordinates.
  Vector project_basis(std::size_t j) const;
  Vector project(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  Matrix rref_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  std::vector<long> free_index_;   // ambient -> quotient index or -1
  std::vector<long> pivot_row_;    // ambient -> rref row or -1
};

}  // namespace tpa

namespace tpa {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& r, std::size_t n);

/// Row echelon form kept sparse. Each stored row has its pivot as the
/// smallest column; rows are added one at a time.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces the row by the stored ones and stores the remainder; returns
  /// the new pivot column, or nothing if the row was dependent.
  std::optional<std::size_t> add_row(const SparseRow& row);
  /// Remainder of the row modulo the stored span.
  SparseRow reduce(const SparseRow& row) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t c) const { return rows_.count(c) > 0; }
  std::vector<std::size_t> pivots() const;

  /// Fully reduced rows (RREF), keyed by pivot column.
  std::map<std::size_t, SparseRow> reduced() const;
  /// Kernel basis with the same convention as kernel(): one vector per
  /// free column among the first `vars` columns.
  std::vector<Vector> kernel(std::size_t vars) const;

 private:
  std::size_t cols_;
  std::map<std::size_t, std::map<std::size_t, Scalar>> rows_;
};

/// Kernel of the homogeneous system with the given rows in n unknowns.
std::vector<Vector> sparse_kernel(std::size_t n, const std::vector<SparseRow>& rows);

/// Solves rows * x = rhs with free variables zero; nothing if inconsistent.
std::optional<Vector> sparse_solve(std::size_t n, const std::vector<SparseRow>& rows, const Vector& rhs);

}  // namespace tpa
