#include "tpa/matrix.hpp"

#include <ostream>
#include <utility>

#include "tpa/errors.hpp"

namespace tpa {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) { return from_columns({v}, v.size()); }

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& c) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(i, j).is_zero()) (*this)(r0 + i, c0 + j) += c * b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in *");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) r[i] += a(i, k) * v[k];
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

// Gauss-Jordan restricted to pivot columns < pivot_limit. Returns pivots.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RowReduction row_reduce(Matrix m) {
  RowReduction out;
  out.pivot_columns = eliminate(m, m.cols());
  out.rank = out.pivot_columns.size();
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

std::vector<Vector> kernel(const Matrix& m) {
  auto red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      const Scalar& x = red.rref(i, f);
      if (!x.is_zero()) v[red.pivot_columns[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve_linear: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = eliminate(aug, m.cols());
  LinearSolution sol;
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!aug(i, m.cols()).is_zero()) return sol;
  sol.consistent = true;
  sol.particular.assign(m.cols(), Scalar());
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!aug(i, f).is_zero()) v[pivots[i]] = -aug(i, f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = eliminate(aug, n);
  if (pivots.size() != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add_scaled(Vector a, const Vector& b, const Scalar& c) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  if (c.is_zero()) return a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
  return a;
}

SpanCoordinates::SpanCoordinates(const std::vector<Vector>& basis, std::size_t ambient_dim)
    : basis_size_(basis.size()), ambient_(ambient_dim) {
  const std::size_t m = basis.size();
  Matrix aug(m, ambient_dim + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i].size() != ambient_dim) throw InputError("SpanCoordinates: vector length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) aug(i, j) = basis[i][j];
    aug(i, ambient_dim + i) = 1;
  }
  pivots_ = eliminate(aug, ambient_dim);
  if (pivots_.size() != m) throw DomainError("SpanCoordinates: family is linearly dependent");
  reduced_ = aug.block(0, 0, m, ambient_dim);
  transform_ = aug.block(0, ambient_dim, m, m);
}

std::optional<Vector> SpanCoordinates::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("SpanCoordinates: vector length mismatch");
  Vector residual = v;
  Vector c(basis_size_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar x = residual[pivots_[r]];
    if (x.is_zero()) continue;
    c[r] = x;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!reduced_(r, j).is_zero()) residual[j] -= x * reduced_(r, j);
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  Vector out(basis_size_);
  for (std::size_t r = 0; r < basis_size_; ++r) {
    if (c[r].is_zero()) continue;
    for (std::size_t i = 0; i < basis_size_; ++i)
      if (!transform_(r, i).is_zero()) out[i] += c[r] * transform_(r, i);
  }
  return out;
}

Vector EchelonSpan::reduce(Vector v) const {
  if (v.size() != ambient_) throw InputError("EchelonSpan: vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar x = v[pivots_[i]];
    if (x.is_zero()) continue;
    const Vector& row = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= x * row[j];
  }
  return v;
}

bool EchelonSpan::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool EchelonSpan::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = r[p].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Scalar x = row[p];
    if (x.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) row[j] -= x * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

QuotientSpace::QuotientSpace(const std::vector<Vector>& relations, std::size_t ambient_dim)
    : ambient_(ambient_dim) {
  rref_ = Matrix::from_rows(relations, ambient_dim);
  pivots_ = eliminate(rref_, ambient_dim);
  free_index_.assign(ambient_dim, -1);
  pivot_row_.assign(ambient_dim, -1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) pivot_row_[pivots_[i]] = static_cast<long>(i);
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (pivot_row_[j] < 0) {
      free_index_[j] = static_cast<long>(free_.size());
      free_.push_back(j);
    }
}

Vector QuotientSpace::project_basis(std::size_t j) const {
  Vector out(free_.size());
  if (free_index_[j] >= 0) {
    out[static_cast<std::size_t>(free_index_[j])] = 1;
    return out;
  }
  auto row = static_cast<std::size_t>(pivot_row_[j]);
  for (std::size_t k = 0; k < free_.size(); ++k) {
    const Scalar& x = rref_(row, free_[k]);
    if (!x.is_zero()) out[k] = -x;
  }
  return out;
}

Vector QuotientSpace::project(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("QuotientSpace: vector length mismatch");
  Vector out(free_.size());
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (v[j].is_zero()) continue;
    if (free_index_[j] >= 0) {
      out[static_cast<std::size_t>(free_index_[j])] += v[j];
      continue;
    }
    auto row = static_cast<std::size_t>(pivot_row_[j]);
    for (std::size_t k = 0; k < free_.size(); ++k) {
      const Scalar& x = rref_(row, free_[k]);
      if (!x.is_zero()) out[k] -= v[j] * x;
    }
  }
  return out;
}

}  // namespace tpa

namespace tpa {

SparseRow to_sparse(const Vector& v) {
  SparseRow out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseRow& r, std::size_t n) {
  Vector v(n);
  for (const auto& [c, x] : r) v.at(c) += x;
  return v;
}

namespace {

using WorkRow = std::map<std::size_t, Scalar>;

void axpy(WorkRow& row, const WorkRow& other, const Scalar& c) {
  for (const auto& [col, v] : other) {
    auto [it, inserted] = row.emplace(col, Scalar());
    it->second += c * v;
    if (it->second.is_zero()) row.erase(it);
  }
}

}  // namespace

SparseRow SparseEchelon::reduce(const SparseRow& row) const {
  WorkRow w;
  for (const auto& [c, v] : row)
    if (!v.is_zero()) w[c] += v;
  for (auto it = w.begin(); it != w.end();) {
    if (it->second.is_zero()) {
      it = w.erase(it);
      continue;
    }
    auto p = rows_.find(it->first);
    if (p == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    Scalar c = -it->second;
    axpy(w, p->second, c);  // only touches columns >= col
    it = w.upper_bound(col);
  }
  return SparseRow(w.begin(), w.end());
}

std::optional<std::size_t> SparseEchelon::add_row(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return std::nullopt;
  const std::size_t pivot = r.front().first;
  Scalar inv = r.front().second.inverse();
  WorkRow stored;
  for (const auto& [c, v] : r) stored.emplace(c, v * inv);
  rows_.emplace(pivot, std::move(stored));
  return pivot;
}

std::vector<std::size_t> SparseEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::map<std::size_t, SparseRow> SparseEchelon::reduced() const {
  std::map<std::size_t, WorkRow> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    WorkRow w = it->second;
    for (auto e = w.upper_bound(it->first); e != w.end();) {
      auto d = done.find(e->first);
      if (d == done.end()) {
        ++e;
        continue;
      }
      const std::size_t col = e->first;
      Scalar c = -e->second;
      axpy(w, d->second, c);  // removes col, adds only free columns > col
      e = w.upper_bound(col);
    }
    done.emplace(it->first, std::move(w));
  }
  std::map<std::size_t, SparseRow> out;
  for (auto& [p, w] : done) out.emplace(p, SparseRow(w.begin(), w.end()));
  return out;
}

std::vector<Vector> SparseEchelon::kernel(std::size_t vars) const {
  auto red = reduced();
  // For each free column f, x_f = 1 and x_p = -row_p[f].
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
  for (const auto& [p, row] : red)
    for (const auto& [c, v] : row)
      if (c != p && c < vars) by_free[c].emplace_back(p, v);
  std::vector<Vector> out;
  for (std::size_t f = 0; f < vars; ++f) {
    if (red.count(f)) continue;
    Vector v(vars);
    v[f] = Scalar(1);
    auto it = by_free.find(f);
    if (it != by_free.end())
      for (const auto& [p, c] : it->second) v[p] = -c;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> sparse_kernel(std::size_t n, const std::vector<SparseRow>& rows) {
  SparseEchelon e(n);
  for (const auto& r : rows) e.add_row(r);
  return e.kernel(n);
}

std::optional<Vector> sparse_solve(std::size_t n, const std::vector<SparseRow>& rows, const Vector& rhs) {
  if (rhs.size() != rows.size()) throw InputError("right-hand side length does not match the system");
  SparseEchelon e(n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow r = rows[i];
    if (!rhs[i].is_zero()) r.emplace_back(n, rhs[i]);
    auto p = e.add_row(r);
    if (p && *p == n) return std::nullopt;
  }
  Vector x(n);
  for (const auto& [p, row] : e.reduced())
    for (const auto& [c, v] : row)
      if (c == n) x[p] = v;
  return x;
}

}  // namespace tpa
