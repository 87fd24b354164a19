#include <gtest/gtest.h>

#include "jr/parabolics.hpp"

using namespace jr;

namespace {

Weight W(std::vector<Q> v) { return Weight(v); }

}  // namespace

TEST(Enumerate, SmallCounts) {
  auto p1 = enumerate_rel_std(1);
  ASSERT_EQ(p1.size(), 3u);
  std::vector<RelStdParabolic> expect{make_parabolic(1, {0, 1}, 1), make_parabolic(1, {0, 0, 1}, 1),
                                      make_parabolic(1, {0, 1, 1}, 2)};
  for (const auto& q : expect) EXPECT_NE(std::find(p1.begin(), p1.end(), q), p1.end()) << q.str();
  EXPECT_EQ(enumerate_rel_std(2).size(), 8u);
  EXPECT_EQ(count_rel_std_bruteforce(1), 3);
  EXPECT_EQ(count_rel_std_bruteforce(2), 8);
  EXPECT_EQ(p1.front(), full_parabolic(1));
  EXPECT_THROW(enumerate_rel_std(0), std::invalid_argument);
}

// Frozen after matching the flag enumerator against the surjection count.
TEST(Enumerate, MatchesBruteForce) {
  const long frozen[] = {3, 8, 20, 48, 112};
  for (int n = 1; n <= 5; ++n) {
    auto ps = enumerate_rel_std(n);
    EXPECT_EQ(static_cast<long>(ps.size()), count_rel_std_bruteforce(n));
    EXPECT_EQ(static_cast<long>(ps.size()), frozen[n - 1]);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_FALSE(ps[i] == ps[i - 1]);
    for (const auto& q : ps) EXPECT_NO_THROW(q.validate());
  }
}

TEST(Parabolic, Validation) {
  EXPECT_THROW(make_parabolic(2, {0, 0, 1, 1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(make_parabolic(2, {0, 1, 1, 2}, 1), std::invalid_argument);
  EXPECT_THROW(make_parabolic(2, {0, 2, 1}, 1), std::invalid_argument);
  EXPECT_THROW(make_parabolic(2, {0, 2}, 2), std::invalid_argument);
}

TEST(Contains, Examples) {
  const auto g = full_parabolic(1);
  const auto a = make_parabolic(1, {0, 0, 1}, 1), b = make_parabolic(1, {0, 1, 1}, 2);
  for (const auto& q : enumerate_rel_std(1)) {
    EXPECT_TRUE(contains(g, q));
    EXPECT_TRUE(contains(q, q));
  }
  EXPECT_FALSE(contains(a, b));
  EXPECT_FALSE(contains(b, a));
  EXPECT_THROW(contains(g, full_parabolic(2)), std::invalid_argument);
}

TEST(Contains, IsAPartialOrder) {
  auto ps = enumerate_rel_std(3);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      if (contains(a, b) && contains(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (const auto& c : ps)
        if (contains(a, b) && contains(b, c)) {
          EXPECT_TRUE(contains(a, c));
        }
    }
}

TEST(Varpi, Examples) {
  EXPECT_EQ(varpi_minus(1, 1), W({frac(-1, 2), frac(1, 2)}));
  EXPECT_EQ(varpi_minus(0, 3), zero_weight(3));
  EXPECT_EQ(varpi_plus(4, 3), zero_weight(3));
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      Q sm = 0, sp = 0;
      for (const auto& x : varpi_minus(i, n)) sm += x;
      for (const auto& x : varpi_plus(i, n)) sp += x;
      EXPECT_EQ(sm, 0);
      EXPECT_EQ(sp, 0);
    }
}

TEST(DeltaHat, Examples) {
  EXPECT_TRUE(delta_hat(full_parabolic(3)).empty());
  auto d = delta_hat(make_parabolic(1, {0, 0, 1}, 1));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], varpi_plus(1, 1));
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : enumerate_rel_std(n)) {
      EXPECT_EQ(static_cast<int>(delta_hat(q).size()), q.d());
      EXPECT_GT(theta_hat(q, zero_weight(n)).v_sq, 0);
    }
}

// Coweights pair to the identity against the simple roots.
TEST(RootData, Duality) {
  for (int n = 1; n <= 4; ++n) {
    auto ps = enumerate_rel_std(n);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        if (!contains(q, p)) continue;
        auto rd = root_data(p, q);
        ASSERT_EQ(rd.roots.size(), rd.coweights.size());
        for (std::size_t i = 0; i < rd.roots.size(); ++i)
          for (std::size_t j = 0; j < rd.coweights.size(); ++j)
            EXPECT_EQ(pair(rd.roots[i], rd.coweights[j]), Q(i == j ? 1 : 0)) << p.str() << " in " << q.str();
      }
  }
}

TEST(SSub, Examples) {
  EXPECT_EQ(s_sub(full_parabolic(3)), s_affine(0, 1));
  EXPECT_EQ(s_sub(make_parabolic(2, {0, 1, 2}, 2)), s_affine(frac(1, 2), frac(3, 2)));
  EXPECT_EQ(s_sub(make_parabolic(1, {0, 0, 1}, 1)), s_affine(-1, 2));
}

TEST(RhoQs, Examples) {
  const auto rg = rho_Q_s(full_parabolic(2));
  EXPECT_EQ(rg.c, zero_weight(2));
  EXPECT_EQ(rg.s, zero_weight(2));
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : enumerate_rel_std(n)) {
      EXPECT_TRUE(exponent_closed_forms(q)) << q.str();
      EXPECT_TRUE(theta_roots_ok(q)) << q.str();
    }
}

// Positivity of each closed form on (-1, 1).
TEST(RhoQs, PositiveInsideStrip) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : enumerate_rel_std(n)) {
      const auto rho = rho_Q_s(q);
      for (const auto& w : delta_hat(q))
        for (Q s : {frac(-99, 100), frac(-1, 3), Q(0), frac(1, 2), frac(99, 100)}) EXPECT_GT(pair(rho, w).eval(s), 0);
    }
}

TEST(ThetaHat, Examples) {
  auto th = theta_hat(full_parabolic(2), rho_Q_s(full_parabolic(2)));
  EXPECT_EQ(th.product, SPoly::constant(Q(1)));
  EXPECT_EQ(th.v_sq, 1);
  auto q = make_parabolic(1, {0, 0, 1}, 1);
  auto t = theta_hat(q, rho_Q_s(q));
  EXPECT_EQ(t.product, s_affine(1, -1));  // (n - i_1)(1 - s) with i_1 = 0
}

TEST(Jacobian, Examples) {
  EXPECT_EQ(jacobian_sq(full_parabolic(3)), 1);
  EXPECT_EQ(jacobian_sq(make_parabolic(1, {0, 1, 1}, 2)), frac(1, 2));
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : enumerate_rel_std(n)) EXPECT_GT(jacobian_sq(q), 0);
}

TEST(Lemma, ItemsOneTwoThree) {
  for (int n = 1; n <= 4; ++n) {
    auto ps = enumerate_rel_std(n);
    for (const auto& q : ps) {
      EXPECT_TRUE(lemma_item1(q)) << q.str();
      EXPECT_TRUE(lemma_item2(q)) << q.str();
      EXPECT_TRUE(restriction_check(q, q));
      EXPECT_TRUE(restriction_check(q, full_parabolic(n)));
      for (const auto& r : ps)
        if (contains(r, q)) {
          EXPECT_TRUE(restriction_check(q, r)) << q.str() << " in " << r.str();
        }
    }
  }
  EXPECT_THROW(restriction_check(full_parabolic(1), make_parabolic(1, {0, 0, 1}, 1)), std::invalid_argument);
}

TEST(Lemma, SweepReport) {
  auto rep = verify_parabolics(4, {frac(-1, 2), Q(0), frac(1, 3), Q(2), frac(-7, 3)});
  EXPECT_TRUE(rep.pass()) << (rep.failures.empty() ? "" : rep.failures[0]);
  EXPECT_GT(rep.cases, 1000);
}
