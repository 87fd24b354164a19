#include <gtest/gtest.h>

#include <set>

#include "jr/orbit_census.hpp"

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

ClassDescriptor diag12(long a1, long a2) {
  return {M({{1, 0}, {0, 2}}), {P({-1, 1}), P({-2, 1})}, {P({a1}), P({a2})}, Q(0)};
}

ClassDescriptor sqrt2(long a) { return {M({{0, 2}, {1, 0}}), {P({-2, 0, 1})}, {P({a})}, Q(1)}; }

}  // namespace

TEST(Group, Counts) {
  EXPECT_EQ(group_elements(1, 3).size(), 2u);
  EXPECT_EQ(group_elements(2, 3).size(), 48u);
  EXPECT_EQ(group_elements(2, 5).size(), 480u);
  EXPECT_EQ(gl_order(2, 5), 480u);
  EXPECT_EQ(gl_order(3, 3), 11232u);
  std::set<std::vector<int>> seen;
  for (const auto& g : group_elements(2, 3)) EXPECT_TRUE(seen.insert(g.g).second);
  EXPECT_THROW(group_elements(2, 4), std::invalid_argument);
}

TEST(Orbit, Examples) {
  FiniteSpace sp(1, 3);
  auto group = group_elements(1, 3);
  // [[B, u], [v, d]] row-major
  auto orb = orbit_of(sp, {1, 1, 1, 0}, group);
  std::vector<std::uint64_t> expect{sp.code({1, 1, 1, 0}), sp.code({1, 2, 2, 0})};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(orb, expect);

  FiniteSpace sp2(2, 3);
  auto g2 = group_elements(2, 3);
  FiniteSpace::Elem central{2, 0, 0, 0, 2, 0, 0, 0, 1};
  EXPECT_EQ(orbit_of(sp2, central, g2).size(), 1u);
  EXPECT_EQ(stabilizer_order(sp2, FiniteSpace::Elem(9, 0), g2), 48u);
}

TEST(Orbit, OrbitStabilizerOnSamples) {
  FiniteSpace sp(2, 3);
  auto group = group_elements(2, 3);
  for (std::uint64_t c = 0; c < sp.size(); c += 97) {
    auto x = sp.decode(c);
    auto size = orbit_of(sp, x, group).size();
    EXPECT_EQ(48 % size, 0u);
    EXPECT_EQ(size * stabilizer_order(sp, x, group), 48u);
  }
}

// Union-find over generators gives the same partition as full orbits.
TEST(Census, UnionFindMatchesFullOrbits) {
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{1, 3}, {2, 3}}) {
    auto rep = verify_separation(n, p);
    FiniteSpace sp(n, p);
    auto group = group_elements(n, p);
    std::uint64_t total = 0;
    for (const auto& o : rep.orbits) {
      auto orb = orbit_of(sp, sp.decode(o.representative), group);
      EXPECT_EQ(orb.size(), o.size);
      EXPECT_EQ(orb.front(), o.representative);
      total += orb.size();
    }
    EXPECT_EQ(total, sp.size());
  }
}

TEST(Census, SeparationExhaustive) {
  auto r1 = verify_separation(1, 3);
  EXPECT_EQ(r1.elements, 81u);
  EXPECT_TRUE(r1.pass()) << (r1.violations.empty() ? "" : r1.violations[0]);
  auto r2 = verify_separation(2, 3);
  EXPECT_EQ(r2.elements, 19683u);
  EXPECT_EQ(r2.regular_semisimple, 7776u);
  EXPECT_TRUE(r2.pass()) << (r2.violations.empty() ? "" : r2.violations[0]);
  for (const auto& o : r2.orbits)
    if (o.regular_semisimple) {
      EXPECT_EQ(o.stabilizer, 1u);
    }
}

TEST(Census, SeparationSampled) {
  auto r = verify_separation_sampled(2, 5, 2000, 42);
  EXPECT_EQ(r.elements, 2000u);
  EXPECT_TRUE(r.pass()) << (r.violations.empty() ? "" : r.violations[0]);
}

TEST(Census, GuardRejectsLargeSpaces) {
  EXPECT_FALSE(FiniteSpace(3, 5).enumerable());
  EXPECT_THROW(verify_separation(3, 5), std::invalid_argument);
  EXPECT_THROW(FiniteSpace(2, 9), std::invalid_argument);
}

TEST(ClassCount, OrbitCountsAreThreeToTheI0) {
  for (std::uint32_t p : {3u, 5u}) {
    EXPECT_EQ(class_orbit_count(diag12(1, 1), p).orbit_count(), 1u);
    EXPECT_EQ(class_orbit_count(diag12(0, 1), p).orbit_count(), 3u);
    EXPECT_EQ(class_orbit_count(diag12(0, 0), p).orbit_count(), 9u);
    EXPECT_EQ(class_orbit_count(sqrt2(1), p).orbit_count(), 1u);
    EXPECT_EQ(class_orbit_count(sqrt2(0), p).orbit_count(), 3u);
    for (const auto& c : {diag12(1, 1), diag12(0, 1), diag12(0, 0), sqrt2(0), sqrt2(1)}) {
      auto r = class_orbit_count(c, p);
      EXPECT_TRUE(r.pass()) << (r.violations.empty() ? "" : r.violations[0]);
    }
  }
}

// Frozen from the exhaustive census at n = 2, p = 3.
TEST(ClassCount, OrbitTableDiag12) {
  auto r = class_orbit_count(diag12(0, 0), 3);
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> got;
  for (const auto& o : r.orbits) got.insert({o.size, o.stabilizer});
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> expect{{12, 4}, {24, 2}, {24, 2}, {24, 2}, {24, 2},
                                                               {48, 1}, {48, 1}, {48, 1}, {48, 1}};
  EXPECT_EQ(got, expect);
  EXPECT_EQ(r.fiber_size, 300u);
}

TEST(ClassCount, TorusOrdersForDegreeTwoFactor) {
  auto r3 = class_orbit_count(sqrt2(0), 3);
  auto r5 = class_orbit_count(sqrt2(0), 5);
  for (const auto& o : r3.orbits) EXPECT_EQ(o.stabilizer, o.eps == "{}" ? 8u : 1u);
  for (const auto& o : r5.orbits) EXPECT_EQ(o.stabilizer, o.eps == "{}" ? 24u : 1u);
}

TEST(ClassCount, BadPrimes) {
  ClassDescriptor collide{M({{1, 0}, {0, 4}}), {P({-1, 1}), P({-4, 1})}, {P({0}), P({0})}, Q(0)};
  EXPECT_THROW(class_orbit_count(collide, 3), std::domain_error);
  EXPECT_THROW(class_orbit_count(sqrt2(0), 7), std::domain_error);
  ClassDescriptor denom{M({{1, 0}, {0, 2}}), {P({-1, 1}), P({-2, 1})}, {Poly<Q>::constant(frac(1, 3)), P({1})}, Q(0)};
  EXPECT_THROW(class_orbit_count(denom, 3), std::domain_error);
  EXPECT_THROW(class_orbit_count(diag12(3, 1), 3), std::domain_error);
  EXPECT_NO_THROW(class_orbit_count(diag12(3, 1), 5));
  EXPECT_THROW(class_orbit_count(diag12(0, 0), 4), std::invalid_argument);
}

TEST(Census, CsvShape) {
  auto r = verify_separation(1, 3);
  auto csv = census_csv(r);
  EXPECT_EQ(csv.rfind("fingerprint,orbit_size,stabilizer_order\n", 0), 0u);
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  EXPECT_EQ(rows, r.orbit_count);
}
