#pragma once

#include <stdexcept>
#include <utility>

#include "matrix.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace jr {

// j-th elementary symmetric function of the eigenvalues of m.
template <class T>
T exterior_trace(const Matrix<T>& m, int j) {
  if (!m.square()) throw std::invalid_argument("exterior_trace: non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (j < 1 || j > n) throw std::invalid_argument("exterior_trace: index out of range");
  T c = charpoly(m)[static_cast<std::size_t>(n - j)];
  return (j % 2) ? -c : c;
}

template <class T>
struct KrylovResult {
  Matrix<T> basis;  // columns w, Bw, ..., B^{n-1} w
  std::size_t rank;
};

template <class T>
KrylovResult<T> krylov_basis(const Matrix<T>& b, const Vec<T>& w) {
  if (!b.square()) throw std::invalid_argument("krylov_basis: non-square matrix");
  if (w.size() != b.rows()) throw std::invalid_argument("krylov_basis: dimension mismatch");
  std::vector<Vec<T>> cols;
  Vec<T> cur = w;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    cols.push_back(cur);
    cur = b * cur;
  }
  Matrix<T> k = Matrix<T>::from_columns(cols);
  return {k, rank(k)};
}

template <class T>
Matrix<T> companion(const Poly<T>& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  Matrix<T> c(n, n, field<T>::zero(f.lead()));
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = field<T>::one(f.lead());
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -(f[i] / f.lead());
  return c;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, int k) {
  Matrix<T> r = Matrix<T>::identity(m.rows(), m.rows() ? m(0, 0) : T{});
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace jr
