#include "ahyp/linalg.hpp"

#include <sstream>

#include "ahyp/errors.hpp"

namespace ahyp {

bool RationalVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Rational RationalVector::sum() const {
  Rational s;
  for (const auto& c : coords_) s += c;
  return s;
}

RationalVector RationalVector::operator-() const {
  RationalVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string RationalVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::size_t RationalVector::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 0x9e3779b97f4a7c15ull + c.hash();
  return h;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("vector dimensions differ");
  Rational s;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const RationalVector> cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].ambient_dim() != dim) throw DimensionMismatch("column dimension differs");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const RationalVector> rows, std::size_t dim) {
  Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].ambient_dim() != dim) throw DimensionMismatch("row dimension differs");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  RationalVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RationalVector Matrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionMismatch("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

RationalVector operator*(const Matrix& a, const RationalVector& v) {
  if (a.cols_ != v.ambient_dim()) throw DimensionMismatch("matrix-vector shapes differ");
  RationalVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t p = next_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != next_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(next_row, j));
    Rational inv = Rational(1) / m(next_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(next_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(next_row, j).is_zero()) m(r, j) -= f * m(next_row, j);
    }
    out.pivot_columns.push_back(c);
    ++next_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<RationalVector> kernel_basis(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) x[e.pivot_columns[r]] = -e.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RationalVector> reduced_basis(std::span<const RationalVector> vectors, std::size_t dim) {
  RowEchelon e = row_reduce(Matrix::from_rows(vectors, dim));
  std::vector<RationalVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

bool solve(const Matrix& m, const RationalVector& b, RationalVector& x) {
  if (b.ambient_dim() != m.rows()) throw DimensionMismatch("right-hand side dimension differs");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return false;
  x = RationalVector(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_columns[r]] = e.reduced(r, m.cols());
  return true;
}

}  // namespace ahyp
