#pragma once

// Dense matrices over exact rationals.
//
// Every elimination routine in this header pivots left to right on the first
// nonzero entry of each column, so kernels, particular solutions and image
// factorizations are canonical and reproducible.

#include <cctype>
#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gcat/errors.hpp"

namespace gcat {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p". Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  for (char ch : text)
    if (std::isspace(static_cast<unsigned char>(ch))) throw InputError("bad rational literal '" + text + "'");
  Rational r;
  if (r.set_str(text, 10) != 0) throw InputError("bad rational literal '" + text + "'");
  if (r.get_den() == 0) throw InputError("rational literal with zero denominator '" + text + "'");
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << ']';
  }
  return os << "](" << m.rows() << 'x' << m.cols() << ')';
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("subtract: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

inline Matrix scale(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Kronecker product, left factor major:
/// out(i*b.rows()+k, j*b.cols()+l) = a(i,j) * b(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

/// Copies `src` into `dst` with its top-left corner at (row, col).
inline void paste(Matrix& dst, const Matrix& src, std::size_t row, std::size_t col) {
  if (row + src.rows() > dst.rows() || col + src.cols() > dst.cols())
    throw ShapeError("paste: block does not fit");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(row + i, col + j) = src(i, j);
}

inline Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix out(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(i, cols[j]);
  return out;
}

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline Rref rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of {x : m x = 0}; one column per free variable, in
/// increasing free-column order, with that free variable set to 1.
inline Matrix kernel_basis(const Matrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix k(m.cols(), free.size());
  for (std::size_t c = 0; c < free.size(); ++c) {
    k(free[c], c) = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) k(r.pivots[row], c) = -r.reduced(row, free[c]);
  }
  return k;
}

/// Some X with a X = b, or nullopt when the system is inconsistent. The
/// returned X is the particular solution with all free variables zero.
inline std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_right: row mismatch");
  const Rref r = rref(hstack(a, b));
  for (auto p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t row = 0; row < r.pivots.size(); ++row)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[row], j) = r.reduced(row, a.cols() + j);
  return x;
}

/// a = column_factor * row_factor with column_factor = pivot columns of a
/// (full column rank) and row_factor = nonzero rows of rref(a) (full row rank).
struct RankFactorization {
  Matrix column_factor;
  Matrix row_factor;
};

inline RankFactorization rank_factorization(const Matrix& a) {
  const Rref r = rref(a);
  Matrix rows(r.pivots.size(), a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows(i, j) = r.reduced(i, j);
  return {select_columns(a, r.pivots), std::move(rows)};
}

}  // namespace gcat
