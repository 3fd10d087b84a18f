#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eqnorm {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (whitespace allowed around the parts).
/// Throws InputError for anything else, including decimal notation.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense exact-rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix scaled(const Rational& s) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Matrix column(std::size_t c) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_sum(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}
  /// Adds v; returns true if it was outside the current span.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return n_; }

 private:
  void reduce(std::vector<Rational>& v) const;
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace eqnorm
