#include "eqnorm/rational.hpp"

#include <cctype>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {
bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw InputError("not a rational number: '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n), q{std::string(den)};
  if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(rhs.data_[i]) != 0) data_[i] += rhs.data_[i];
  return *this;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (sgn(x) != 0) x *= s;
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0 && sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix out(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

Matrix block_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Rational>> nullspace(Matrix m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t c = pivots_[r];
    if (sgn(v[c]) == 0) continue;
    Rational f = v[c];
    for (std::size_t j = c; j < n_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
  }
}

bool EchelonBasis::insert(std::vector<Rational> v) {
  reduce(v);
  std::size_t c = 0;
  while (c < n_ && sgn(v[c]) == 0) ++c;
  if (c == n_) return false;
  Rational inv = 1 / v[c];
  for (std::size_t j = c; j < n_; ++j)
    if (sgn(v[j]) != 0) v[j] *= inv;
  // Keep rows fully reduced against the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (sgn(row[c]) == 0) continue;
    Rational f = row[c];
    for (std::size_t j = c; j < n_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

bool EchelonBasis::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace eqnorm
