#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modtwist/rational.hpp"

namespace modtwist {

using Vector = std::vector<Rational>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoSolution : std::runtime_error {
  NoSolution() : std::runtime_error("linear system is inconsistent") {}
};
struct Singular : std::runtime_error {
  Singular() : std::runtime_error("matrix is singular") {}
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors; all must have length `cols`.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_columns(std::span<const Vector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Canonical null-space basis: one vector per free column f, with 1 in
/// position f, zeros in the other free positions.
std::vector<Vector> kernel_basis(const Matrix& m);

struct SolveResult {
  Vector x;
  bool unique = true;
};

/// One solution of m x = b with free variables set to zero.
/// Throws NoSolution when the system is inconsistent.
SolveResult solve(const Matrix& m, const Vector& b);

/// Solves m X = B column by column with a single elimination pass.
/// Throws NoSolution if any column is inconsistent.
Matrix solve_many(const Matrix& m, const Matrix& rhs);

Matrix invert(const Matrix& m);

// Vector helpers.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// Reduced row-echelon basis of span(vectors). Deterministic for a given span.
struct CanonicalSpan {
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
};
CanonicalSpan canonical_span(std::span<const Vector> vectors, std::size_t ambient_dim);

}  // namespace modtwist
