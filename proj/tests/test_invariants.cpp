#include <gtest/gtest.h>

#include "jr/invariants.hpp"
#include "jr/orbit_census.hpp"
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

Vec<Q> V(std::vector<long> c) {
  Vec<Q> v;
  for (long x : c) v.push_back(Q(x));
  return v;
}

JRElement<Q> random_element(Rng& rng, std::size_t n) {
  JRElement<Q> x;
  x.B = Matrix<Q>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x.B(i, j) = random_q(rng, 9, 3);
  for (std::size_t i = 0; i < n; ++i) {
    x.u.push_back(random_q(rng, 9, 3));
    x.v.push_back(random_q(rng, 9, 3));
  }
  x.d = random_q(rng, 9, 3);
  return x;
}

Matrix<Q> random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix<Q> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_q(rng, 5, 2);
    if (inverse(g)) return g;
  }
}

}  // namespace

TEST(Decompose, Examples) {
  auto e = decompose(M({{2, 1}, {3, 5}}));
  EXPECT_EQ(e.B, M({{2}}));
  EXPECT_EQ(e.u, V({1}));
  EXPECT_EQ(e.v, V({3}));
  EXPECT_EQ(e.d, Q(5));
  auto id = decompose(Matrix<Q>::identity(3));
  EXPECT_EQ(id.B, Matrix<Q>::identity(2));
  EXPECT_EQ(id.u, V({0, 0}));
  EXPECT_EQ(id.d, Q(1));
  auto z = decompose(Matrix<Q>(4, 4, Q(0)));
  EXPECT_EQ(z.B, Matrix<Q>(3, 3, Q(0)));
  EXPECT_EQ(compose(e), M({{2, 1}, {3, 5}}));
  EXPECT_THROW(decompose(Matrix<Q>(2, 3)), std::invalid_argument);
}

TEST(Invariants, Examples) {
  auto c1 = invariants(decompose(M({{2, 1}, {3, 5}})));
  EXPECT_EQ(c1.A, V({5, 3}));
  EXPECT_EQ(c1.Bc, V({2}));
  JRElement<Q> x{M({{1, 0}, {0, 2}}), V({1, 1}), V({1, 1}), Q(0)};
  auto c2 = invariants(x);
  EXPECT_EQ(c2.A, V({0, 2, 3}));
  EXPECT_EQ(c2.Bc, V({3, 2}));
  auto c0 = invariants(decompose(Matrix<Q>(3, 3, Q(0))));
  EXPECT_EQ(c0.A, V({0, 0, 0}));
  EXPECT_EQ(c0.Bc, V({0, 0}));
}

TEST(Invariants, ExteriorTracesOfB) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto x = random_element(rng, 1 + t % 4);
    auto c = invariants(x);
    for (std::size_t j = 1; j <= x.n(); ++j) EXPECT_EQ(c.Bc[j - 1], exterior_trace(x.B, static_cast<int>(j)));
  }
}

TEST(RegularSemisimple, Examples) {
  EXPECT_TRUE(is_regular_semisimple(JRElement<Q>{M({{1, 0}, {0, 2}}), V({1, 1}), V({1, 1}), Q(0)}));
  EXPECT_FALSE(is_regular_semisimple(JRElement<Q>{M({{1, 0}, {0, 2}}), V({0, 0}), V({1, 1}), Q(0)}));
  EXPECT_FALSE(is_regular_semisimple(JRElement<Q>{M({{1, 0}, {0, 1}}), V({1, 1}), V({1, 1}), Q(0)}));
}

TEST(SameClass, ConjugationInvariance) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    auto x = random_element(rng, n);
    auto g = random_invertible(rng, n);
    auto y = act(x, g);
    ASSERT_EQ(invariants(y), invariants(x));
    ASSERT_TRUE(same_class(x, y));
  }
  Rng r2(1);
  auto x = random_element(r2, 2);
  EXPECT_TRUE(same_class(x, x));
  auto bumped = x;
  bumped.d += 1;
  EXPECT_FALSE(same_class(x, bumped));
}

// Every regular semisimple element of gl_3(F_3) has trivial stabilizer.
TEST(RegularSemisimple, TrivialStabilizerOverF3) {
  FiniteSpace sp(2, 3);
  auto group = group_elements(2, 3);
  long checked = 0;
  for (std::uint64_t c = 0; c < sp.size(); ++c) {
    auto x = sp.decode(c);
    if (!is_regular_semisimple(sp.to_jr(x))) continue;
    ++checked;
    ASSERT_EQ(stabilizer_order(sp, x, group), 1u) << "code " << c;
  }
  EXPECT_EQ(checked, 7776);
}

TEST(CyclicModule, Examples) {
  EXPECT_EQ(cyclic_module_iso(companion(P({2, -3, 1}))), Matrix<Q>::identity(2));
  EXPECT_EQ(cyclic_module_iso(M({{1, 0}, {0, 2}})), M({{1, 1}, {1, 2}}));
  auto p3 = cyclic_module_iso(M({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(p3.col(0), V({1, 1, 1}));
}

TEST(CyclicModule, RoundTripToCompanion) {
  for (auto b : {M({{1, 0}, {0, 2}}), M({{0, 2}, {1, 0}}), M({{1, 1, 0}, {0, 2, 1}, {1, 0, 3}})}) {
    auto p = cyclic_module_iso(b);
    EXPECT_EQ(*inverse(p) * b * p, companion(charpoly(b)));
  }
}

TEST(Alpha, Examples) {
  auto b = M({{1, 0}, {0, 2}});
  std::vector<Poly<Q>> fs{P({-1, 1}), P({-2, 1})};
  auto a0 = alpha_invariant(b, fs, V({0, 0}), V({3, 4}));
  EXPECT_TRUE(a0[0].is_zero() && a0[1].is_zero());
  auto a1 = alpha_invariant(b, fs, V({3, 4}), V({0, 0}));
  EXPECT_TRUE(a1[0].is_zero() && a1[1].is_zero());
  auto a2 = alpha_invariant(b, fs, V({1, 1}), V({1, 1}));
  EXPECT_EQ(a2[0], P({1}));
  EXPECT_EQ(a2[1], P({1}));
  // n = 1: alpha = u1 v1
  auto a3 = alpha_invariant(M({{5}}), {P({-5, 1})}, V({3}), V({-2}));
  EXPECT_EQ(a3[0], P({-6}));
}

TEST(Alpha, IndependentOfCyclicVector) {
  auto b = M({{1, 1, 0}, {0, 2, 1}, {1, 0, 3}});
  std::vector<Poly<Q>> fs{charpoly(b)};
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    Vec<Q> u{random_q(rng, 9, 2), random_q(rng, 9, 2), random_q(rng, 9, 2)};
    Vec<Q> v{random_q(rng, 9, 2), random_q(rng, 9, 2), random_q(rng, 9, 2)};
    auto k1 = krylov_basis(b, V({1, 0, 0}));
    auto k2 = krylov_basis(b, V({1, 2, -1}));
    ASSERT_EQ(k1.rank, 3u);
    ASSERT_EQ(k2.rank, 3u);
    auto t1 = transport(b, fs, u, v, &k1.basis);
    auto t2 = transport(b, fs, u, v, &k2.basis);
    EXPECT_EQ(t1.alpha, t2.alpha);
  }
}

TEST(Alpha, ConjugationInvariant) {
  auto b = M({{0, 2}, {1, 0}});
  std::vector<Poly<Q>> fs{P({-2, 0, 1})};
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    JRElement<Q> x{b, {random_q(rng, 9, 2), random_q(rng, 9, 2)}, {random_q(rng, 9, 2), random_q(rng, 9, 2)}, Q(0)};
    // an element of the centralizer Q[B] keeps B fixed
    Matrix<Q> h = b;
    const Q c = random_q(rng, 5, 1) + 7;
    for (std::size_t i = 0; i < 2; ++i) h(i, i) += c;
    auto y = act(x, h);
    ASSERT_EQ(y.B, b);
    EXPECT_EQ(alpha_invariant(b, fs, x.u, x.v), alpha_invariant(b, fs, y.u, y.v));
  }
}

TEST(RrssClass, Construction) {
  auto b = M({{1, 0}, {0, 2}});
  std::vector<Poly<Q>> fs{P({-1, 1}), P({-2, 1})};
  auto all_nonzero = build_rrss_class(b, fs, {P({1}), P({1})}, Q(0));
  EXPECT_TRUE(all_nonzero.I0.empty());
  auto all_zero = build_rrss_class(b, fs, {P({0}), P({0})}, Q(0));
  EXPECT_EQ(all_zero.I0, (std::vector<int>{1, 2}));
  EXPECT_EQ(all_zero.xi_u, V({0, 0}));
  EXPECT_EQ(all_zero.xi_v, V({0, 0}));
  auto mixed = build_rrss_class(b, fs, {P({0}), P({3})}, Q(0));
  EXPECT_EQ(mixed.I0, (std::vector<int>{1}));
  EXPECT_EQ(mixed.xi_u[0], Q(0));
  EXPECT_EQ(mixed.xi_v[0], Q(0));
  JRElement<Q> xi{b, mixed.xi_u, mixed.xi_v, Q(0)};
  EXPECT_EQ(alpha_invariant(b, fs, xi.u, xi.v), mixed.alpha);
  EXPECT_THROW(build_rrss_class(b, {P({-1, 1}), P({-3, 1})}, {P({0}), P({0})}, Q(0)), std::invalid_argument);
  EXPECT_THROW(build_rrss_class(M({{1, 0}, {0, 1}}), {P({-1, 1}), P({-1, 1})}, {P({0}), P({0})}, Q(0)),
               std::invalid_argument);
}

TEST(RrssClass, RepresentativesStayInClass) {
  auto b = M({{1, 1, 0}, {0, 2, 0}, {0, 0, 0}});  // charpoly t (t-1)(t-2)
  std::vector<Poly<Q>> fs{P({0, 1}), P({-1, 1}), P({-2, 1})};
  auto c = build_rrss_class(b, fs, {P({0}), P({0}), P({5})}, Q(7));
  ASSERT_EQ(c.I0, (std::vector<int>{1, 2}));
  auto eps = enumerate_eps_subsets(c.I0);
  EXPECT_EQ(eps.size(), 9u);
  for (const auto& e : eps) {
    auto x = orbit_representative(c, e);
    EXPECT_TRUE(same_class(x, orbit_representative(c, EpsSubset{}))) << e.str();
    EXPECT_EQ(invariants(x), c.inv);
    EXPECT_EQ(alpha_invariant(b, fs, x.u, x.v), c.alpha);
    auto t = transport(b, fs, x.u, x.v, &c.P);
    for (int i : c.I0) {
      const auto k = static_cast<std::size_t>(i - 1);
      EXPECT_EQ(!t.u[k].is_zero(), e.sign_of(i) > 0) << e.str();
      EXPECT_EQ(!t.v[k].is_zero(), e.sign_of(i) < 0) << e.str();
    }
  }
  EXPECT_THROW(orbit_representative(c, EpsSubset{3}), std::invalid_argument);
}
