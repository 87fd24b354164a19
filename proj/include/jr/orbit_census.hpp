#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eps_subset.hpp"
#include "invariants.hpp"
#include "report.hpp"

namespace jr {

// Rational class data before reduction: B, the monic irreducible factors of
// its characteristic polynomial, alpha (one residue per factor) and d.
struct ClassDescriptor {
  Matrix<Q> B;
  std::vector<Poly<Q>> factors;
  std::vector<Poly<Q>> alpha;
  Q d;

  std::size_t n() const { return B.rows(); }
};

namespace census_detail {

inline std::uint64_t checked_pow(std::uint64_t p, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

inline bool den_ok(const Q& x, std::uint32_t p) { return x.get_den() % p != 0; }

}  // namespace census_detail

// Elements of gl_{n+1}(F_p) as row-major residue arrays, with B the top-left
// n x n block, u the last column, v the last row and d the corner.
class FiniteSpace {
 public:
  static constexpr std::uint64_t kGuard = 100000000;

  FiniteSpace(std::size_t n, std::uint32_t p) : n_(n), p_(p), N_(n + 1) {
    if (n < 1) throw std::invalid_argument("census: n must be at least 1");
    if (!is_prime(p)) throw std::invalid_argument("census: p = " + std::to_string(p) + " is not prime");
    size_ = census_detail::checked_pow(p, N_ * N_, UINT64_MAX / 2);
  }

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::uint64_t size() const { return size_; }
  bool enumerable() const { return size_ <= kGuard; }

  using Elem = std::vector<int>;

  std::uint64_t code(const Elem& x) const {
    std::uint64_t c = 0;
    for (std::size_t k = x.size(); k-- > 0;) c = c * p_ + static_cast<std::uint64_t>(x[k]);
    return c;
  }
  Elem decode(std::uint64_t c) const {
    Elem x(N_ * N_);
    for (auto& e : x) {
      e = static_cast<int>(c % p_);
      c /= p_;
    }
    return x;
  }

  JRElement<Fp> to_jr(const Elem& x) const {
    Matrix<Fp> m(N_, N_, Fp(0, p_));
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t j = 0; j < N_; ++j) m(i, j) = Fp(x[i * N_ + j], p_);
    return decompose(m);
  }
  Elem from_jr(const JRElement<Fp>& e) const {
    Matrix<Fp> m = compose(e);
    Elem x(N_ * N_);
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t j = 0; j < N_; ++j) x[i * N_ + j] = static_cast<int>(m(i, j).value());
    return x;
  }

  // Ad(g^{-1}) on the block embedding diag(g, 1); gi = g^{-1}, both n x n.
  Elem act(const Elem& x, const std::vector<int>& g, const std::vector<int>& gi) const {
    auto G = [&](const std::vector<int>& a, std::size_t i, std::size_t j) -> long {
      if (i < n_ && j < n_) return a[i * n_ + j];
      return i == j ? 1 : 0;
    };
    std::vector<long> t(N_ * N_, 0);
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t k = 0; k < N_; ++k) {
        long a = G(gi, i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < N_; ++j) t[i * N_ + j] += a * x[k * N_ + j];
      }
    Elem y(N_ * N_);
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t j = 0; j < N_; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < N_; ++k) s += (t[i * N_ + k] % p_) * G(g, k, j);
        y[i * N_ + j] = static_cast<int>(((s % p_) + p_) % p_);
      }
    return y;
  }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::size_t N_;
  std::uint64_t size_;
};

struct GroupElement {
  std::vector<int> g, gi;
};

inline std::vector<int> to_ints(const Matrix<Fp>& m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(static_cast<int>(m(i, j).value()));
  return out;
}

inline Matrix<Fp> from_ints(const std::vector<int>& a, std::size_t n, std::uint32_t p) {
  Matrix<Fp> m(n, n, Fp(0, p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Fp(a[i * n + j], p);
  return m;
}

// All of GL_n(F_p), each once.
inline std::vector<GroupElement> group_elements(std::size_t n, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("group_elements: p is not prime");
  const std::uint64_t total = census_detail::checked_pow(p, n * n, FiniteSpace::kGuard);
  if (total > FiniteSpace::kGuard) throw std::invalid_argument("group_elements: p^(n^2) exceeds the enumeration guard");
  std::vector<GroupElement> out;
  std::vector<int> a(n * n, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t r = c;
    for (auto& e : a) {
      e = static_cast<int>(r % p);
      r /= p;
    }
    auto inv = inverse(from_ints(a, n, p));
    if (inv) out.push_back({a, to_ints(*inv)});
  }
  return out;
}

inline std::uint64_t gl_order(std::size_t n, std::uint32_t p) {
  std::uint64_t pn = census_detail::checked_pow(p, n, UINT64_MAX / 2), r = 1, pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    r *= pn - pk;
    pk *= p;
  }
  return r;
}

inline std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint64_t x = 1;
    std::uint32_t ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  throw std::logic_error("no primitive root");
}

// Elementary transvections and diag(omega, 1, ..., 1) generate GL_n(F_p).
inline std::vector<GroupElement> group_generators(std::size_t n, std::uint32_t p) {
  std::vector<GroupElement> out;
  auto id = [&] {
    std::vector<int> a(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1;
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto g = id(), gi = id();
      g[i * n + j] = 1;
      gi[i * n + j] = static_cast<int>(p - 1);
      out.push_back({g, gi});
    }
  const std::uint32_t w = primitive_root(p);
  if (w != 1) {
    auto g = id(), gi = id();
    g[0] = static_cast<int>(w);
    gi[0] = static_cast<int>(Fp(w, p).inverse().value());
    out.push_back({g, gi});
  }
  return out;
}

inline std::string fingerprint(const ClassInvariants<Fp>& c) {
  std::string s = "A=";
  for (std::size_t i = 0; i < c.A.size(); ++i) s += (i ? " " : "") + std::to_string(c.A[i].value());
  s += ";B=";
  for (std::size_t i = 0; i < c.Bc.size(); ++i) s += (i ? " " : "") + std::to_string(c.Bc[i].value());
  return s;
}

inline std::vector<std::uint64_t> orbit_of(const FiniteSpace& sp, const FiniteSpace::Elem& x,
                                           const std::vector<GroupElement>& group) {
  std::vector<std::uint64_t> out;
  for (const auto& g : group) out.push_back(sp.code(sp.act(x, g.g, g.gi)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::uint64_t stabilizer_order(const FiniteSpace& sp, const FiniteSpace::Elem& x,
                                      const std::vector<GroupElement>& group) {
  std::uint64_t k = 0;
  for (const auto& g : group)
    if (sp.act(x, g.g, g.gi) == x) ++k;
  return k;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

struct OrbitRecord {
  std::uint64_t representative;  // smallest code in the orbit
  std::uint64_t size;
  std::uint64_t stabilizer;
  std::string fingerprint;
  bool regular_semisimple;
};

struct CensusReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t elements = 0;  // enumerated elements, or samples drawn
  std::uint64_t regular_semisimple = 0;
  std::uint64_t orbit_count = 0;
  std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>> class_table;
  std::vector<OrbitRecord> orbits;
  std::vector<std::string> violations;
  std::uint64_t violation_count = 0;

  bool pass() const { return violation_count == 0; }
  void violate(const std::string& s) {
    ++violation_count;
    if (violations.size() < 20) violations.push_back(s);
  }
};

// Exhaustive orbit census of gl_{n+1}(F_p): orbit-stabilizer, constancy of
// the invariants on orbits, and separation of regular semisimple orbits.
inline CensusReport verify_separation(std::size_t n, std::uint32_t p) {
  FiniteSpace sp(n, p);
  if (!sp.enumerable()) throw std::invalid_argument("census: p^((n+1)^2) exceeds 10^8, use sampling mode");
  CensusReport rep;
  rep.p = p;
  rep.n = n;
  rep.elements = sp.size();
  const auto gens = group_generators(n, p);
  const auto group = group_elements(n, p);
  const std::uint64_t order = gl_order(n, p);
  if (group.size() != order) rep.violate("group enumeration size " + std::to_string(group.size()));

  const std::size_t total = sp.size();
  UnionFind uf(total);
  std::vector<std::uint32_t> fp_id(total);
  std::vector<char> rs(total);
  std::unordered_map<std::string, std::uint32_t> fp_index;
  std::vector<std::string> fp_names;
  for (std::uint64_t c = 0; c < total; ++c) {
    auto x = sp.decode(c);
    for (const auto& g : gens) uf.unite(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(sp.code(sp.act(x, g.g, g.gi))));
    JRElement<Fp> e = sp.to_jr(x);
    auto key = fingerprint(invariants(e));
    auto [it, fresh] = fp_index.emplace(key, static_cast<std::uint32_t>(fp_names.size()));
    if (fresh) fp_names.push_back(key);
    fp_id[c] = it->second;
    rs[c] = is_regular_semisimple(e);
    rep.regular_semisimple += rs[c];
  }

  std::unordered_map<std::uint32_t, std::size_t> orbit_at;
  std::vector<std::uint64_t> fp_count(fp_names.size(), 0);
  std::vector<std::int64_t> rs_root(fp_names.size(), -1);
  for (std::uint64_t c = 0; c < total; ++c) {
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(c));
    ++fp_count[fp_id[c]];
    auto [it, fresh] = orbit_at.emplace(r, rep.orbits.size());
    if (fresh) rep.orbits.push_back({c, 0, 0, fp_names[fp_id[c]], rs[c] != 0});
    OrbitRecord& o = rep.orbits[it->second];
    ++o.size;
    if (o.fingerprint != fp_names[fp_id[c]]) rep.violate("invariants not constant on orbit of code " + std::to_string(o.representative));
    if (rs[c]) {
      auto& slot = rs_root[fp_id[c]];
      if (slot < 0) slot = r;
      else if (slot != static_cast<std::int64_t>(r))
        rep.violate("separation: regular semisimple codes " + std::to_string(slot) + " and " + std::to_string(c) +
                    " share invariants " + fp_names[fp_id[c]] + " but lie in different orbits");
    }
  }
  rep.orbit_count = rep.orbits.size();
  std::map<std::string, std::uint64_t> fp_orbit_sum;
  for (auto& o : rep.orbits) {
    o.stabilizer = stabilizer_order(sp, sp.decode(o.representative), group);
    if (o.size * o.stabilizer != order)
      rep.violate("orbit-stabilizer fails at code " + std::to_string(o.representative));
    if (o.regular_semisimple && o.stabilizer != 1)
      rep.violate("regular semisimple code " + std::to_string(o.representative) + " has stabilizer " + std::to_string(o.stabilizer));
    rep.class_table[o.fingerprint].push_back({o.size, o.stabilizer});
    fp_orbit_sum[o.fingerprint] += o.size;
  }
  for (std::size_t f = 0; f < fp_names.size(); ++f)
    if (fp_orbit_sum[fp_names[f]] != fp_count[f]) rep.violate("orbits do not exhaust class " + fp_names[f]);
  for (auto& [k, v] : rep.class_table) std::sort(v.begin(), v.end());
  return rep;
}

// Sampled separation: for a random regular semisimple X, a second element
// with the same invariants is built directly (random cyclic u', then v' from
// the linear conditions v' B^k u' = v B^k u) and moved by a random group
// element; it must lie in the orbit of X.
inline CensusReport verify_separation_sampled(std::size_t n, std::uint32_t p, std::uint64_t samples, std::uint64_t seed) {
  FiniteSpace sp(n, p);
  CensusReport rep;
  rep.p = p;
  rep.n = n;
  rep.sampled = true;
  rep.seed = seed;
  const auto group = group_elements(n, p);
  Rng rng(seed);
  std::uniform_int_distribution<int> digit(0, static_cast<int>(p) - 1);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  const std::size_t N = n + 1;
  auto random_elem = [&] {
    FiniteSpace::Elem x(N * N);
    for (auto& e : x) e = digit(rng);
    return x;
  };
  for (std::uint64_t t = 0; t < samples; ++t) {
    FiniteSpace::Elem x;
    JRElement<Fp> ex;
    do {
      x = random_elem();
      ex = sp.to_jr(x);
    } while (!is_regular_semisimple(ex));
    const auto inv = invariants(ex);
    JRElement<Fp> ey = ex;
    for (;;) {
      for (auto& c : ey.u) c = Fp(digit(rng), p);
      auto k = krylov_basis(ey.B, ey.u);
      if (k.rank != n) continue;
      Vec<Fp> target(inv.A.begin() + 1, inv.A.end());
      // v' K = target, i.e. K^T v'^T = target^T
      ey.v = solve(k.basis.transpose(), target);
      break;
    }
    const auto& h = group[pick(rng)];
    FiniteSpace::Elem y = sp.act(sp.from_jr(ey), h.g, h.gi);
    ++rep.elements;
    ++rep.regular_semisimple;
    if (invariants(sp.to_jr(y)) != inv) {
      rep.violate("constructed partner of code " + std::to_string(sp.code(x)) + " has different invariants");
      continue;
    }
    auto orb = orbit_of(sp, x, group);
    if (!std::binary_search(orb.begin(), orb.end(), sp.code(y)))
      rep.violate("separation: codes " + std::to_string(sp.code(x)) + " and " + std::to_string(sp.code(y)) +
                  " share invariants but are not conjugate");
    if (orb.size() != group.size()) rep.violate("regular semisimple code " + std::to_string(sp.code(x)) + " has nontrivial stabilizer");
  }
  rep.orbit_count = 0;
  return rep;
}

// Reduction of a rational class mod p; throws std::domain_error naming the
// first failed goodness condition.
struct ReducedClass {
  RrssClassData<Fp> data;
  ClassInvariants<Fp> target;  // invariants of the rational xi_empty, reduced
  std::vector<int> factor_degrees;
};

inline RrssClassData<Q> build_class(const ClassDescriptor& c) {
  return build_rrss_class(c.B, c.factors, c.alpha, c.d);
}

inline ReducedClass reduce_class(const ClassDescriptor& c, std::uint32_t p) {
  using census_detail::den_ok;
  if (!is_prime(p)) throw std::invalid_argument("reduce_class: p is not prime");
  const auto rational = build_class(c);
  auto bad = [&](const std::string& why) { throw std::domain_error("bad prime " + std::to_string(p) + ": " + why); };
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = 0; j < c.n(); ++j)
      if (!den_ok(c.B(i, j), p)) bad("divides a denominator of B");
  if (!den_ok(c.d, p)) bad("divides the denominator of d");
  for (const auto& f : c.factors)
    for (int k = 0; k <= f.degree(); ++k)
      if (!den_ok(f[k], p)) bad("divides a denominator of a factor");
  for (const auto& a : rational.alpha)
    for (int k = 0; k <= a.degree(); ++k)
      if (!den_ok(a[k], p)) bad("divides a denominator of alpha");
  for (const auto& v : rational.inv.A)
    if (!den_ok(v, p)) bad("divides a denominator of the class invariants");
  Matrix<Fp> bp = reduce_mod(c.B, p);
  if (!is_separable(charpoly(bp))) bad("characteristic polynomial of B is not separable mod p");
  std::vector<Poly<Fp>> fp;
  std::vector<int> degs;
  for (const auto& f : c.factors) {
    auto r = reduce_mod(f, p);
    if (!is_irreducible_small(r)) bad("factor " + f.str() + " is reducible mod p");
    fp.push_back(r);
    degs.push_back(r.degree());
  }
  std::vector<Poly<Fp>> ap;
  for (std::size_t i = 0; i < rational.alpha.size(); ++i) {
    auto r = reduce_mod(rational.alpha[i], p) % fp[i];
    if (!rational.alpha[i].is_zero() && r.is_zero()) bad("alpha component " + std::to_string(i + 1) + " vanishes mod p");
    ap.push_back(r);
  }
  ReducedClass out{build_rrss_class(bp, fp, ap, reduce_mod(c.d, p)), {}, degs};
  for (const auto& v : rational.inv.A) out.target.A.push_back(reduce_mod(v, p));
  for (const auto& v : rational.inv.Bc) out.target.Bc.push_back(reduce_mod(v, p));
  return out;
}

struct ClassOrbit {
  std::uint64_t representative;
  std::uint64_t size;
  std::uint64_t stabilizer;
  std::string eps;  // matching X_I, empty string if none
};

struct ClassCensus {
  std::uint32_t p = 0;
  std::vector<int> I0;
  std::uint64_t expected = 0;
  std::uint64_t fiber_size = 0;
  std::vector<ClassOrbit> orbits;
  std::vector<std::string> violations;

  std::uint64_t orbit_count() const { return orbits.size(); }
  bool pass() const { return violations.empty() && orbits.size() == expected; }
};

inline std::uint64_t torus_order(const std::vector<int>& idx, const std::vector<int>& degrees, std::uint32_t p) {
  std::uint64_t r = 1;
  for (int i : idx) r *= census_detail::checked_pow(p, static_cast<std::size_t>(degrees.at(i - 1)), UINT64_MAX / 2) - 1;
  return r;
}

// Orbits of GL_n(F_p) in the fiber of the reduced class, found by brute force
// over all elements with the target invariants, then matched with the
// representatives X_I.
inline ClassCensus class_orbit_count(const ClassDescriptor& c, std::uint32_t p) {
  ReducedClass rc = reduce_class(c, p);
  const std::size_t n = c.n();
  FiniteSpace sp(n, p);
  const auto group = group_elements(n, p);
  const auto gens = group_generators(n, p);
  ClassCensus out;
  out.p = p;
  out.I0 = rc.data.I0;
  out.expected = 1;
  for (std::size_t i = 0; i < out.I0.size(); ++i) out.expected *= 3;

  const std::uint64_t nb = census_detail::checked_pow(p, n * n, FiniteSpace::kGuard);
  const std::uint64_t nv = census_detail::checked_pow(p, n, FiniteSpace::kGuard);
  if (nb > FiniteSpace::kGuard || nb * nv * nv > FiniteSpace::kGuard) throw std::invalid_argument("class_orbit_count: fiber search exceeds the guard");
  const std::string target = fingerprint(rc.target);
  std::vector<std::uint64_t> fiber;
  for (std::uint64_t bc = 0; bc < nb; ++bc) {
    JRElement<Fp> e;
    std::uint64_t r = bc;
    e.B = Matrix<Fp>(n, n, Fp(0, p));
    for (std::size_t k = 0; k < n * n; ++k) {
      e.B(k / n, k % n) = Fp(static_cast<std::int64_t>(r % p), p);
      r /= p;
    }
    Poly<Fp> chi = charpoly(e.B);
    bool same = true;
    for (std::size_t j = 1; j <= n; ++j) {
      Fp a = chi[static_cast<int>(n - j)];
      if ((j % 2 ? -a : a) != rc.target.Bc[j - 1]) same = false;
    }
    if (!same) continue;
    e.d = rc.target.A[0];
    for (std::uint64_t uc = 0; uc < nv; ++uc)
      for (std::uint64_t vc = 0; vc < nv; ++vc) {
        e.u.assign(n, Fp(0, p));
        e.v.assign(n, Fp(0, p));
        std::uint64_t a = uc, b = vc;
        for (std::size_t k = 0; k < n; ++k) {
          e.u[k] = Fp(static_cast<std::int64_t>(a % p), p);
          e.v[k] = Fp(static_cast<std::int64_t>(b % p), p);
          a /= p;
          b /= p;
        }
        if (fingerprint(invariants(e)) == target) fiber.push_back(sp.code(sp.from_jr(e)));
      }
  }
  std::sort(fiber.begin(), fiber.end());
  out.fiber_size = fiber.size();
  auto index_of = [&](std::uint64_t code) -> std::int64_t {
    auto it = std::lower_bound(fiber.begin(), fiber.end(), code);
    return (it != fiber.end() && *it == code) ? it - fiber.begin() : -1;
  };
  UnionFind uf(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    auto x = sp.decode(fiber[i]);
    for (const auto& g : gens) {
      auto j = index_of(sp.code(sp.act(x, g.g, g.gi)));
      if (j < 0) {
        out.violations.push_back("fiber not stable under the group at code " + std::to_string(fiber[i]));
        continue;
      }
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  std::map<std::uint32_t, std::size_t> at;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    auto r = uf.find(static_cast<std::uint32_t>(i));
    auto [it, fresh] = at.emplace(r, out.orbits.size());
    if (fresh) out.orbits.push_back({fiber[i], 0, 0, ""});
    ++out.orbits[it->second].size;
  }
  const std::uint64_t order = gl_order(n, p);
  for (auto& o : out.orbits) {
    o.stabilizer = stabilizer_order(sp, sp.decode(o.representative), group);
    if (o.size * o.stabilizer != order) out.violations.push_back("orbit-stabilizer fails at code " + std::to_string(o.representative));
  }

  for (const auto& eps : enumerate_eps_subsets(out.I0)) {
    auto x = sp.from_jr(orbit_representative(rc.data, eps));
    auto j = index_of(sp.code(x));
    if (j < 0) {
      out.violations.push_back("X_" + eps.str() + " is not in the reduced class");
      continue;
    }
    auto& o = out.orbits[at.at(uf.find(static_cast<std::uint32_t>(j)))];
    if (!o.eps.empty()) out.violations.push_back("X_" + eps.str() + " and X_" + o.eps + " are conjugate");
    o.eps = eps.str();
    std::vector<int> rest;
    for (int i : out.I0)
      if (!eps.meets_abs(i)) rest.push_back(i);
    const std::uint64_t expect = torus_order(rest, rc.factor_degrees, p);
    const std::uint64_t got = stabilizer_order(sp, x, group);
    if (got != expect)
      out.violations.push_back("stabilizer of X_" + eps.str() + " is " + std::to_string(got) + ", torus order " + std::to_string(expect));
  }
  for (const auto& o : out.orbits)
    if (o.eps.empty()) out.violations.push_back("orbit of code " + std::to_string(o.representative) + " contains no X_I");
  if (out.orbits.size() != out.expected)
    out.violations.push_back("orbit count " + std::to_string(out.orbits.size()) + ", expected " + std::to_string(out.expected));
  return out;
}

// CSV rows: fingerprint, orbit_size, stabilizer_order
inline std::string census_csv(const CensusReport& r) {
  std::string s = "fingerprint,orbit_size,stabilizer_order\n";
  for (const auto& [fp, rows] : r.class_table)
    for (const auto& [size, stab] : rows) s += "\"" + fp + "\"," + std::to_string(size) + "," + std::to_string(stab) + "\n";
  return s;
}

}  // namespace jr
