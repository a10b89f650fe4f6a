#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ahyp/rational.hpp"

namespace ahyp {

/// Exact coordinate vector in the ambient space of a root system realization.
class RationalVector {
public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t ambient_dim() const { return coords_.size(); }
  std::span<const Rational> coords() const { return coords_; }

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  Rational sum() const;

  RationalVector operator-() const;
  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  /// Lexicographic; used only for canonical ordering in tests and reports.
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    return a.coords_ < b.coords_;
  }

  /// "(1, 0, -1/2)".
  std::string str() const;
  std::size_t hash() const;

private:
  std::vector<Rational> coords_;
};

/// Standard inner product; throws DimensionMismatch on differing dimensions.
Rational dot(const RationalVector& a, const RationalVector& b);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const { return v.hash(); }
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal dimension).
  static Matrix from_columns(std::span<const RationalVector> cols, std::size_t dim);
  static Matrix from_rows(std::span<const RationalVector> rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend RationalVector operator*(const Matrix& a, const RationalVector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix transpose() const;
  bool is_identity() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form computed by Gauss-Jordan elimination.
///
/// Pivoting rule: columns are scanned left to right and the pivot is the
/// first row (top to bottom, among unused rows) with a nonzero entry. The
/// pivot row is scaled to a leading 1. The rule is fixed so that kernel
/// bases and witnesses are reproducible.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, one vector per free column
/// in increasing column order, with that free coordinate set to 1.
std::vector<RationalVector> kernel_basis(const Matrix& m);

/// Nonzero rows of the RREF of the matrix whose rows are `vectors`.
std::vector<RationalVector> reduced_basis(std::span<const RationalVector> vectors, std::size_t dim);

/// Solves m x = b exactly when the system is consistent; returns false otherwise.
bool solve(const Matrix& m, const RationalVector& b, RationalVector& x);

}  // namespace ahyp
