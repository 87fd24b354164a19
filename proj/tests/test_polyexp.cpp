#include <gtest/gtest.h>

#include <cmath>

#include "jr/polyexp.hpp"

using namespace jr;

namespace {

MPoly random_mpoly(Rng& rng, std::size_t dim) {
  MPoly p(dim);
  std::uniform_int_distribution<int> e(0, 2), k(1, 4);
  for (int t = k(rng); t > 0; --t) {
    MPoly::Mono m(dim);
    for (auto& x : m) x = e(rng);
    p.add_term(m, random_q(rng, 9, 3));
  }
  return p;
}

PolyExp random_polyexp(Rng& rng, std::size_t dim) {
  PolyExp f(dim);
  std::uniform_int_distribution<int> k(1, 3), l(-2, 2);
  for (int t = k(rng); t > 0; --t) {
    Vec<Q> lambda(dim);
    for (auto& x : lambda) x = Q(l(rng));
    f.add_term(lambda, random_mpoly(rng, dim));
  }
  return f;
}

}  // namespace

TEST(PolyExpRing, Laws) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 1 + t % 3;
    auto f = random_polyexp(rng, dim), g = random_polyexp(rng, dim), h = random_polyexp(rng, dim);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
  }
  EXPECT_THROW(PolyExp(1) + PolyExp(2), std::invalid_argument);
}

TEST(PolyExpRing, PurePolyPartAndExponents) {
  const Vec<Q> lam{Q(1), Q(-2)}, mu{frac(1, 2), Q(3)};
  auto f = PolyExp::exp(lam, MPoly::constant(2, 1)) + PolyExp::polynomial(MPoly::constant(2, 3));
  EXPECT_EQ(f.pure_poly_part(), MPoly::constant(2, 3));
  auto prod = PolyExp::exp(lam, MPoly::constant(2, 1)) * PolyExp::exp(mu, MPoly::constant(2, 1));
  ASSERT_EQ(prod.terms().size(), 1u);
  EXPECT_EQ(prod.terms().begin()->first, (Vec<Q>{frac(3, 2), Q(1)}));
  auto zero = f + PolyExp::exp(lam, MPoly::constant(2, -1)) + PolyExp::polynomial(MPoly::constant(2, -3));
  EXPECT_TRUE(zero.terms().empty());
}

// Pointwise agreement on a generic grid forces equal term maps: the formal
// evaluation separates exponents, and each P_lambda is pinned by
// (deg+1)^d interpolation points.
TEST(PolyExpRing, UniquenessOnGrid) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto f = random_polyexp(rng, 2), g = random_polyexp(rng, 2);
    bool agree = true;
    for (int i = 0; i < 5 && agree; ++i)
      for (int j = 0; j < 5 && agree; ++j) {
        Vec<Q> v{Q(i) + frac(1, 7), Q(j) + frac(2, 11)};
        agree = f.eval_formal(v) == g.eval_formal(v);
      }
    EXPECT_EQ(agree, f == g);
    auto h = f * PolyExp::polynomial(MPoly::constant(2, 1));
    EXPECT_EQ(h, f);
  }
}

TEST(RankOne, Examples) {
  const auto q = make_parabolic(2, {0, 1, 2}, 2);
  auto r = p_Q_s_rank1(q, frac(1, 2), Vec<Q>{Q(0), Q(0), Q(0)});
  EXPECT_EQ(r.xi, 0);
  EXPECT_DOUBLE_EQ(r.value(), 0.0);
  EXPECT_NEAR(r.constant_term() + r.exp_coefficient(), 0.0, 1e-15);
  auto f = r.normalized();
  EXPECT_EQ(f.pure_poly_part(), MPoly::constant(1, -1 / r.a));
  EXPECT_THROW(p_Q_s_rank1(full_parabolic(2), Q(0), Vec<Q>(3, Q(0))), std::invalid_argument);
  EXPECT_THROW(p_Q_s_rank1(make_parabolic(2, {0, 0, 1, 2}, 1), Q(0), Vec<Q>(3, Q(0))), std::invalid_argument);
}

// Closed form against the adaptive quadrature of the defining integral.
TEST(RankOne, AgreesWithQuadrature) {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    Lattice lat(n);
    for (std::size_t qi = 0; qi < lat.size(); ++qi) {
      if (lat.d(qi) != 1) continue;
      for (Q s : {Q(0), frac(1, 2), frac(-1, 3)}) {
        for (int t = 0; t < 3; ++t) {
          Vec<Q> x = random_point(rng, static_cast<std::size_t>(n + 1), 30, 7);
          auto exact = p_Q_s_rank1(lat[qi], s, x);
          auto quad = p_Q_s_quadrature(lat, qi, s.get_d(), x);
          const double ref = exact.value();
          EXPECT_LE(std::abs(quad.value - ref), 1e-6 * std::max(1.0, std::abs(ref)))
              << lat[qi].str() << " s=" << s.get_str() << " X=" << point_str(x);
        }
      }
    }
  }
}

// (-1)^d j^{-1} theta_hat(rho)^{-1} computed directly from the weights.
TEST(RankOne, ConstantTermMatchesThetaHat) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : enumerate_rel_std(n)) {
      if (q.d() != 1) continue;
      for (Q s : {Q(0), frac(1, 2), frac(-1, 3), frac(7, 8)}) {
        auto r = p_Q_s_rank1(q, s, Vec<Q>(static_cast<std::size_t>(n + 1), Q(1)));
        const auto w = delta_hat(q).at(0);
        const double theta = pair(rho_Q_s(q), w).eval(s).get_d() / std::sqrt(pair(w, w).get_d());
        const double expect = -1.0 / (std::sqrt(jacobian_sq(q).get_d()) * theta);
        EXPECT_NEAR(r.constant_term(), expect, 1e-9) << q.str();
      }
    }
}

TEST(RankOne, DegenerateS) {
  const auto q = make_parabolic(2, {0, 1, 2}, 2);
  for (Q s : {Q(1), Q(-1)}) {
    Q a = pair(rho_Q_s(q), delta_hat(q)[0]).eval(s);
    if (a != 0) continue;
    EXPECT_THROW(p_Q_s_rank1(q, s, Vec<Q>{Q(1), Q(2), Q(3)}), std::domain_error);
    auto r = p_Q_s_rank1(q, s, Vec<Q>{Q(1), Q(2), Q(3)}, true);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.normalized().pure_poly_part(), MPoly::variable(1, 0));
    EXPECT_NEAR(r.value(), r.scale() * r.xi.get_d(), 1e-12);
  }
  // one of s = 1, s = -1 kills this exponent
  Q a1 = pair(rho_Q_s(q), delta_hat(q)[0]).eval(Q(1)), a2 = pair(rho_Q_s(q), delta_hat(q)[0]).eval(Q(-1));
  EXPECT_TRUE(a1 == 0 || a2 == 0);
}

TEST(Quadrature, FullGroupIsOne) {
  Lattice lat(2);
  EXPECT_DOUBLE_EQ(p_Q_s_quadrature(lat, lat.full(), 0.3, Vec<Q>{Q(1), Q(-1), Q(2)}).value, 1.0);
}

TEST(Quadrature, RankTwoConstantTerm) {
  Lattice lat(2);
  for (std::size_t qi = 0; qi < lat.size(); ++qi) {
    if (lat.d(qi) != 2) continue;
    for (Q s : {Q(0), frac(1, 2)}) {
      auto fit = fit_constant_term(lat, qi, s);
      EXPECT_EQ(fit.winner, "with_j") << lat[qi].str();
      EXPECT_LT(fit.error, 1e-4) << lat[qi].str();
      EXPECT_GT(std::abs(fit.with_j - fit.without_j), 1e-3) << lat[qi].str();
    }
  }
}
