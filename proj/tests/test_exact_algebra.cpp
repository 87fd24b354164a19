#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "jr/exact_algebra.hpp"
#include "jr/polynomial.hpp"
#include "jr/report.hpp"

using namespace jr;

namespace {

Poly<Q> P(std::vector<long> c) {
  std::vector<Q> q;
  for (long x : c) q.push_back(Q(x));
  return Poly<Q>(q);
}

Matrix<Q> M(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Q>> r;
  for (auto& row : rows) {
    std::vector<Q> q;
    for (long x : row) q.push_back(Q(x));
    r.push_back(q);
  }
  return Matrix<Q>::from_rows(r);
}

// Leibniz expansion, independent of the elimination code.
Q leibniz_det(const Matrix<Q>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Q acc = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Q t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
    acc += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Matrix<Q> random_matrix(Rng& rng, std::size_t n) {
  Matrix<Q> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_q(rng, 9, 3);
  return m;
}

}  // namespace

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(M({{0}})), P({0, 1}));
  EXPECT_EQ(charpoly(M({{1, 0}, {0, 2}})), P({2, -3, 1}));
  Matrix<Fp> swap(2, 2, Fp(0, 3));
  swap(0, 1) = Fp(1, 3);
  swap(1, 0) = Fp(1, 3);
  Poly<Fp> expect({Fp(2, 3), Fp(0, 3), Fp(1, 3)});
  EXPECT_EQ(charpoly(swap), expect);
}

TEST(Charpoly, AgreesWithLeibnizDeterminant) {
  Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 5;
    Matrix<Q> m = random_matrix(rng, n);
    Poly<Q> chi = charpoly(m);
    ASSERT_EQ(chi.degree(), static_cast<int>(n));
    Q lambda = random_q(rng, 20, 4);
    Matrix<Q> shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? lambda : Q(0)) - m(i, j);
    ASSERT_EQ(chi.eval(lambda), leibniz_det(shifted)) << "size " << n;
  }
}

TEST(ExteriorTrace, Examples) {
  EXPECT_EQ(exterior_trace(M({{1, 0}, {0, 2}}), 2), Q(2));
  EXPECT_EQ(exterior_trace(Matrix<Q>(3, 3, Q(0)), 2), Q(0));
  EXPECT_EQ(exterior_trace(M({{2, 1}, {3, 5}}), 1), Q(7));
}

TEST(ExteriorTrace, ExtremesAreTraceAndDeterminant) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 5;
    Matrix<Q> m = random_matrix(rng, n);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    EXPECT_EQ(exterior_trace(m, 1), tr);
    EXPECT_EQ(exterior_trace(m, static_cast<int>(n)), leibniz_det(m));
  }
}

TEST(Separable, Examples) {
  EXPECT_TRUE(is_separable(P({-1, 0, 1})));
  EXPECT_FALSE(is_separable(P({0, 0, 1})));
  EXPECT_TRUE(is_separable(P({1, 0, 1})));
}

TEST(Krylov, Examples) {
  EXPECT_EQ(krylov_basis(M({{1, 0}, {0, 2}}), Vec<Q>{1, 1}).rank, 2u);
  EXPECT_EQ(krylov_basis(M({{1, 0}, {0, 2}}), Vec<Q>{1, 0}).rank, 1u);
  EXPECT_EQ(krylov_basis(M({{0, 1}, {0, 0}}), Vec<Q>{0, 1}).rank, 2u);
}

TEST(Rational, CrossMultiplication) {
  Rng rng(9);
  for (int t = 0; t < 1000; ++t) {
    long a = std::uniform_int_distribution<long>(-1000, 1000)(rng), c = std::uniform_int_distribution<long>(-1000, 1000)(rng);
    long b = std::uniform_int_distribution<long>(1, 1000)(rng), d = std::uniform_int_distribution<long>(1, 1000)(rng);
    Q sum = frac(a, b) + frac(c, d);
    EXPECT_EQ(sum * Q(b) * Q(d), Q(a * d + b * c));
    EXPECT_GT(sum.get_den(), 0);
  }
  EXPECT_EQ(frac(2, 4).get_str(), "1/2");
  EXPECT_EQ(frac(3, -6).get_str(), "-1/2");
  EXPECT_THROW(frac(1, 0), std::domain_error);
  EXPECT_EQ(parse_q("-6/4"), frac(-3, 2));
  EXPECT_THROW(parse_q("1/x"), std::invalid_argument);
}

TEST(PrimeField, Arithmetic) {
  Fp a(2, 5), b(4, 5);
  EXPECT_EQ((a * b).value(), 3u);
  EXPECT_EQ((a / b).value(), 3u);
  EXPECT_EQ((a - b).value(), 3u);
  EXPECT_THROW(Fp(0, 5).inverse(), std::domain_error);
  EXPECT_THROW(Fp(1, 3) + Fp(1, 5), std::domain_error);
}

TEST(Polynomial, GcdAndInverse) {
  Poly<Q> f = P({-1, 0, 1}), g = P({-1, 1});
  EXPECT_EQ(gcd(f, g), g);
  auto [d, s, t] = xgcd(P({2, -3, 1}), P({1, 0, 1}));
  EXPECT_EQ(d.degree(), 0);
  EXPECT_EQ(s * P({2, -3, 1}) + t * P({1, 0, 1}), d);
  Poly<Q> inv = inverse_mod(P({0, 1}), P({-2, 0, 1}));
  EXPECT_EQ((inv * P({0, 1})) % P({-2, 0, 1}), P({1}));
}

TEST(Polynomial, IrreducibleModP) {
  EXPECT_TRUE(is_irreducible_small(reduce_mod(P({-2, 0, 1}), 3)));
  EXPECT_TRUE(is_irreducible_small(reduce_mod(P({-2, 0, 1}), 5)));
  EXPECT_FALSE(is_irreducible_small(reduce_mod(P({-2, 0, 1}), 7)));  // 3^2 = 2 mod 7
  EXPECT_TRUE(is_irreducible_small(reduce_mod(P({1, 1, 0, 1}), 2)));
}

TEST(Companion, CharpolyRoundTrip) {
  Poly<Q> f = P({-6, 11, -6, 1});
  EXPECT_EQ(charpoly(companion(f)), f);
}
