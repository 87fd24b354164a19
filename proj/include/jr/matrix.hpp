#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace jr {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& like = T{}) {
    Matrix m(n, n, field<T>::zero(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field<T>::one(like);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw std::invalid_argument("ragged matrix columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<T> col(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < y.cols_; ++j) {
        T acc = x.cols_ ? x(i, 0) * y(0, j) : T{};
        for (std::size_t k = 1; k < x.cols_; ++k) acc += x(i, k) * y(k, j);
        r(i, j) = acc;
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend Matrix operator*(const T& s, Matrix x) {
    for (auto& e : x.a_) e = s * e;
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  const std::vector<T>& data() const { return a_; }

 private:
  void check_same(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Vec<T> operator*(const Matrix<T>& m, const Vec<T>& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
  Vec<T> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc = m.cols() ? m(i, 0) * x[0] : T{};
    for (std::size_t j = 1; j < m.cols(); ++j) acc += m(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

template <class T>
Vec<T> operator*(const Vec<T>& x, const Matrix<T>& m) {
  if (m.rows() != x.size()) throw std::invalid_argument("vector-matrix: dimension mismatch");
  Vec<T> r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T acc = m.rows() ? x[0] * m(0, j) : T{};
    for (std::size_t i = 1; i < m.rows(); ++i) acc += x[i] * m(i, j);
    r[j] = acc;
  }
  return r;
}

template <class T>
T dot(const Vec<T>& x, const Vec<T>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  T acc = x.empty() ? T{} : x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

namespace detail {

// Row echelon form in place; returns (rank, sign of the row permutation).
template <class T>
std::pair<std::size_t, int> echelon(Matrix<T>& m) {
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field<T>::is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field<T>::is_zero(m(i, c))) continue;
      T f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return {r, sign};
}

}  // namespace detail

template <class T>
T det(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("det: non-square matrix");
  if (m.rows() == 0) {
    if constexpr (std::is_same_v<T, Q>) return Q(1);
    else throw std::invalid_argument("det: empty prime-field matrix");
  }
  T like = m(0, 0);
  auto [rank, sign] = detail::echelon(m);
  if (rank < m.rows()) return field<T>::zero(like);
  T d = field<T>::from_int(sign, like);
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return detail::echelon(m).first;
}

// Gauss-Jordan inverse; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<T> a(n, 2 * n, field<T>::zero(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = field<T>::one(m(0, 0));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field<T>::is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(c, j));
    T f = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= f;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || field<T>::is_zero(a(i, c))) continue;
      T g = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= g * a(c, j);
    }
  }
  Matrix<T> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

// Unique solution of m x = b; throws if m is singular.
template <class T>
Vec<T> solve(const Matrix<T>& m, const Vec<T>& b) {
  auto inv = inverse(m);
  if (!inv) throw std::domain_error("solve: singular system");
  return *inv * b;
}

inline Matrix<Fp> reduce_mod(const Matrix<Q>& m, std::uint32_t p) {
  Matrix<Fp> r(m.rows(), m.cols(), Fp(0, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod(m(i, j), p);
  return r;
}

}  // namespace jr
