#include "modtwist/matrix.hpp"

#include <algorithm>

namespace modtwist {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix p = a;
  for (auto& x : p.data_) x *= s;
  return p;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && m(r, c).is_zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivot_row, k));
    const Rational inv = Rational(1) / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(pivot_row, k).is_zero()) m(i, k) -= f * m(pivot_row, k);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Matrix augment(const Matrix& m, const Matrix& rhs) {
  Matrix aug(m.rows(), m.cols() + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, m.cols() + c) = rhs(r, c);
  }
  return aug;
}

}  // namespace

Matrix solve_many(const Matrix& m, const Matrix& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("right-hand side row count mismatch");
  const std::size_t n = m.cols();
  // Eliminate only over the coefficient columns so rhs never becomes a pivot.
  Matrix aug = augment(m, rhs);
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < aug.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < aug.rows() && aug(r, c).is_zero()) ++r;
    if (r == aug.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < aug.cols(); ++k) std::swap(aug(r, k), aug(pivot_row, k));
    const Rational inv = Rational(1) / aug(pivot_row, c);
    for (std::size_t k = c; k < aug.cols(); ++k) aug(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == pivot_row || aug(i, c).is_zero()) continue;
      const Rational f = aug(i, c);
      for (std::size_t k = c; k < aug.cols(); ++k)
        if (!aug(pivot_row, k).is_zero()) aug(i, k) -= f * aug(pivot_row, k);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t k = n; k < aug.cols(); ++k)
      if (!aug(r, k).is_zero()) throw NoSolution();
  Matrix x(n, rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t k = 0; k < rhs.cols(); ++k) x(pivots[i], k) = aug(i, n + k);
  return x;
}

SolveResult solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  std::vector<Vector> cols{b};
  Matrix x = solve_many(m, Matrix::from_columns(cols, b.size()));
  return {x.column(0), rank(m) == m.cols()};
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  if (rank(m) < m.rows()) throw Singular();
  return solve_many(m, Matrix::identity(m.rows()));
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector s = a;
  return s += b;
}

Vector& operator+=(Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
  Vector s = a;
  for (std::size_t i = 0; i < a.size(); ++i) s[i] -= b[i];
  return s;
}

Vector operator-(const Vector& a) {
  Vector s = a;
  for (auto& x : s) x = -x;
  return s;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

CanonicalSpan canonical_span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  auto red = rref(Matrix::from_rows(vectors, ambient_dim));
  CanonicalSpan out;
  out.pivots = red.pivots;
  for (std::size_t i = 0; i < red.rank; ++i) out.basis.push_back(red.reduced.row(i));
  return out;
}

}  // namespace modtwist
