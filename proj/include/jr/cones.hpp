#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabolics.hpp"
#include "report.hpp"

namespace jr {

// Sign attached to the term R in Gamma'_Q(H,X).
//   arthur:     (-1)^{d_R^G~}, the convention under which the recurrence holds
//   as_written: (-1)^{d_Q^R}
enum class GammaSign { arthur, as_written };

inline std::string to_string(GammaSign g) { return g == GammaSign::arthur ? "arthur" : "as_written"; }

// The relatively standard lattice for fixed n with every root and coweight
// functional numbered once, so that a point is paired with each functional a
// single time per evaluation.
class Lattice {
 public:
  explicit Lattice(int n) : n_(n), ps_(enumerate_rel_std(n)) {
    const std::size_t m = ps_.size();
    contains_.assign(m * m, false);
    roots_.resize(m * m);
    coweights_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!jr::contains(ps_[i], ps_[j])) continue;
        contains_[i * m + j] = true;
        auto rd = root_data(ps_[j], ps_[i]);
        for (const auto& a : rd.roots) roots_[j * m + i].push_back(intern(a));
        for (const auto& w : rd.coweights) coweights_[j * m + i].push_back(intern(w));
      }
    full_ = index_of(full_parabolic(n));
    for (const auto& f : funcs_) {
      std::vector<double> d;
      for (const auto& x : f) d.push_back(x.get_d());
      funcs_d_.push_back(d);
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return ps_.size(); }
  const RelStdParabolic& operator[](std::size_t i) const { return ps_.at(i); }
  const std::vector<RelStdParabolic>& parabolics() const { return ps_; }
  std::size_t full() const { return full_; }
  std::size_t index_of(const RelStdParabolic& p) const {
    for (std::size_t i = 0; i < ps_.size(); ++i)
      if (ps_[i] == p) return i;
    throw std::invalid_argument("lattice: unknown parabolic " + p.str());
  }
  // parabolic i contains parabolic j
  bool contains(std::size_t i, std::size_t j) const { return contains_[i * size() + j]; }
  int d(std::size_t i) const { return ps_[i].d(); }

  // ids of Delta_P^Q and hat Delta_P^Q for P = ps[p] inside Q = ps[q]
  const std::vector<std::size_t>& root_ids(std::size_t p, std::size_t q) const { return checked(roots_, p, q); }
  const std::vector<std::size_t>& coweight_ids(std::size_t p, std::size_t q) const { return checked(coweights_, p, q); }

  const std::vector<Weight>& functionals() const { return funcs_; }

  std::vector<Q> evaluate(const Vec<Q>& h) const {
    std::vector<Q> v;
    v.reserve(funcs_.size());
    for (const auto& f : funcs_) v.push_back(pair(f, h));
    return v;
  }
  std::vector<double> evaluate(const std::vector<double>& h) const {
    std::vector<double> v;
    v.reserve(funcs_d_.size());
    for (const auto& f : funcs_d_) {
      double acc = 0;
      for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * h[i];
      v.push_back(acc);
    }
    return v;
  }

 private:
  std::size_t intern(const Weight& w) {
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    ids_[w] = funcs_.size();
    funcs_.push_back(w);
    return funcs_.size() - 1;
  }
  const std::vector<std::size_t>& checked(const std::vector<std::vector<std::size_t>>& t, std::size_t p,
                                          std::size_t q) const {
    if (!contains(q, p)) throw std::invalid_argument("lattice: " + ps_[p].str() + " not contained in " + ps_[q].str());
    return t[p * size() + q];
  }

  int n_;
  std::vector<RelStdParabolic> ps_;
  std::vector<bool> contains_;
  std::vector<std::vector<std::size_t>> roots_, coweights_;
  std::map<Weight, std::size_t> ids_;
  std::vector<Weight> funcs_;
  std::vector<std::vector<double>> funcs_d_;
  std::size_t full_ = 0;
};

inline int sgn(double x) { return (x > 0) - (x < 0); }
inline int sgn_of(const Q& x) { return ::sgn(x); }
inline int sgn_of(double x) { return sgn(x); }

// Cone indicators on precomputed functional values.
template <class S>
int tau_v(const Lattice& lat, std::size_t p, std::size_t q, const std::vector<S>& vals) {
  for (auto id : lat.root_ids(p, q))
    if (sgn_of(vals[id]) <= 0) return 0;
  return 1;
}
template <class S>
int tau_hat_v(const Lattice& lat, std::size_t p, std::size_t q, const std::vector<S>& vals) {
  for (auto id : lat.coweight_ids(p, q))
    if (sgn_of(vals[id]) <= 0) return 0;
  return 1;
}
template <class S>
int tau_bar_v(const Lattice& lat, std::size_t q, const std::vector<S>& vals) {
  for (auto id : lat.root_ids(q, lat.full()))
    if (sgn_of(vals[id]) > 0) return 0;
  return 1;
}

inline int parity(int e) { return (e % 2) ? -1 : 1; }

// sigma_1^2(H) = sum_{Q >= P2} (-1)^{d_2^Q} tau_1^Q(H) tau_hat_Q(H)
template <class S>
int sigma_v(const Lattice& lat, std::size_t p1, std::size_t p2, const std::vector<S>& vals) {
  if (!lat.contains(p2, p1)) throw std::invalid_argument("sigma: non-nested pair");
  int acc = 0;
  for (std::size_t q = 0; q < lat.size(); ++q) {
    if (!lat.contains(q, p2)) continue;
    acc += parity(lat.d(p2) - lat.d(q)) * tau_v(lat, p1, q, vals) * tau_hat_v(lat, q, lat.full(), vals);
  }
  return acc;
}

// Gamma'_Q(H,X) from the functional values at H and at H - X.
template <class S>
int gamma_prime_v(const Lattice& lat, std::size_t q, const std::vector<S>& at_h, const std::vector<S>& at_hx,
                  GammaSign conv) {
  int acc = 0;
  for (std::size_t r = 0; r < lat.size(); ++r) {
    if (!lat.contains(r, q)) continue;
    const int sign = conv == GammaSign::arthur ? parity(lat.d(r)) : parity(lat.d(q) - lat.d(r));
    acc += sign * tau_hat_v(lat, r, lat.full(), at_hx) * tau_v(lat, q, r, at_h);
  }
  return acc;
}

inline Vec<Q> minus(const Vec<Q>& a, const Vec<Q>& b) {
  Vec<Q> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Point-level entry points.
inline int tau(const Lattice& lat, const RelStdParabolic& p, const RelStdParabolic& q, const Vec<Q>& h) {
  return tau_v(lat, lat.index_of(p), lat.index_of(q), lat.evaluate(h));
}
inline int tau_hat(const Lattice& lat, const RelStdParabolic& p, const RelStdParabolic& q, const Vec<Q>& h) {
  return tau_hat_v(lat, lat.index_of(p), lat.index_of(q), lat.evaluate(h));
}
inline int tau_bar(const Lattice& lat, const RelStdParabolic& q, const Vec<Q>& h) {
  return tau_bar_v(lat, lat.index_of(q), lat.evaluate(h));
}
inline int sigma(const Lattice& lat, const RelStdParabolic& p1, const RelStdParabolic& p2, const Vec<Q>& h) {
  return sigma_v(lat, lat.index_of(p1), lat.index_of(p2), lat.evaluate(h));
}
inline int gamma_prime(const Lattice& lat, const RelStdParabolic& q, const Vec<Q>& h, const Vec<Q>& x,
                       GammaSign conv = GammaSign::arthur) {
  return gamma_prime_v(lat, lat.index_of(q), lat.evaluate(h), lat.evaluate(minus(h, x)), conv);
}

inline bool generic(const std::vector<Q>& vals) {
  for (const auto& v : vals)
    if (::sgn(v) == 0) return false;
  return true;
}

// sum_{R <= P <= P2} (-1)^{d_P^{P2}} = [R = P2] for every nested pair.
inline CheckReport verify_basic_identity(int n) {
  CheckReport rep{"basic_identity", "alternating sum over the interval [R, P2] of the lattice", 0, 0, 0, {}};
  for (int m = 1; m <= n; ++m) {
    Lattice lat(m);
    for (std::size_t r = 0; r < lat.size(); ++r)
      for (std::size_t p2 = 0; p2 < lat.size(); ++p2) {
        if (!lat.contains(p2, r)) continue;
        int acc = 0;
        for (std::size_t p = 0; p < lat.size(); ++p)
          if (lat.contains(p, r) && lat.contains(p2, p)) acc += parity(lat.d(p) - lat.d(p2));
        ++rep.cases;
        if (acc != (r == p2 ? 1 : 0)) rep.fail("n=" + std::to_string(m) + " R=" + lat[r].str() + " P2=" + lat[p2].str());
      }
  }
  return rep;
}

// Draws a point at which every functional of the lattice is nonzero; the
// rejected draws are counted in rep.degenerate.
inline Vec<Q> generic_point(const Lattice& lat, Rng& rng, CheckReport& rep, const Vec<Q>* shift = nullptr) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec<Q> h = random_point(rng, static_cast<std::size_t>(lat.n() + 1));
    if (generic(lat.evaluate(h)) && (!shift || generic(lat.evaluate(minus(h, *shift))))) return h;
    ++rep.degenerate;
  }
  throw std::runtime_error("no generic sample found");
}

// sum_{Q >= P} tau_hat_P^Q(H) tau_bar_Q(H) = 1
inline CheckReport verify_langlands(int n, long samples, std::uint64_t seed) {
  CheckReport rep{"langlands", "partition of a_0 by the cones tau_hat_P^Q tau_bar_Q", 0, 0, 0, {}};
  Rng rng(seed);
  for (int m = 1; m <= n; ++m) {
    Lattice lat(m);
    for (long t = 0; t < samples; ++t) {
      Vec<Q> h = generic_point(lat, rng, rep);
      auto vals = lat.evaluate(h);
      for (std::size_t p = 0; p < lat.size(); ++p) {
        int acc = 0;
        for (std::size_t q = 0; q < lat.size(); ++q)
          if (lat.contains(q, p)) acc += tau_hat_v(lat, p, q, vals) * tau_bar_v(lat, q, vals);
        ++rep.cases;
        if (acc != 1) rep.fail("n=" + std::to_string(m) + " P=" + lat[p].str() + " H=" + point_str(h));
      }
    }
  }
  return rep;
}

// tau_P1^P(H) tau_hat_P(H) = sum_{P2 >= P} sigma_1^2(H), and sigma_1^1 = 0
// for P1 != G~.
inline CheckReport verify_sigma(int n, long samples, std::uint64_t seed) {
  CheckReport rep{"sigma_decomposition", "sigma functions decompose tau_1^P tau_hat_P", 0, 0, 0, {}};
  Rng rng(seed);
  for (int m = 1; m <= n; ++m) {
    Lattice lat(m);
    for (long t = 0; t < samples; ++t) {
      Vec<Q> h = generic_point(lat, rng, rep);
      auto vals = lat.evaluate(h);
      for (std::size_t p1 = 0; p1 < lat.size(); ++p1) {
        const int self = sigma_v(lat, p1, p1, vals);
        ++rep.cases;
        if (self != (p1 == lat.full() ? 1 : 0)) rep.fail("sigma_P^P n=" + std::to_string(m) + " P=" + lat[p1].str());
        for (std::size_t p = 0; p < lat.size(); ++p) {
          if (!lat.contains(p, p1)) continue;
          int rhs = 0;
          for (std::size_t p2 = 0; p2 < lat.size(); ++p2)
            if (lat.contains(p2, p) ) rhs += sigma_v(lat, p1, p2, vals);
          const int lhs = tau_v(lat, p1, p, vals) * tau_hat_v(lat, p, lat.full(), vals);
          ++rep.cases;
          if (lhs != rhs)
            rep.fail("n=" + std::to_string(m) + " P1=" + lat[p1].str() + " P=" + lat[p].str() + " H=" + point_str(h));
        }
      }
    }
  }
  return rep;
}

// tau_hat_P(H - X) = sum_{Q >= P} (-1)^{d_Q^G~} tau_hat_P^Q(H) Gamma'_Q(H,X)
inline CheckReport verify_gamma_recurrence(int n, long samples, std::uint64_t seed,
                                           GammaSign conv = GammaSign::arthur) {
  CheckReport rep{"gamma_recurrence", "expansion of tau_hat_P(H - X) through Gamma'_Q", 0, 0, 0, {}};
  rep.identity += "[" + to_string(conv) + "]";
  Rng rng(seed);
  for (int m = 1; m <= n; ++m) {
    Lattice lat(m);
    for (long t = 0; t < samples; ++t) {
      Vec<Q> x = random_point(rng, static_cast<std::size_t>(m + 1));
      if (t == 0) x.assign(x.size(), Q(0));
      Vec<Q> h = generic_point(lat, rng, rep, &x);
      auto at_h = lat.evaluate(h), at_hx = lat.evaluate(minus(h, x));
      std::vector<int> gamma(lat.size());
      for (std::size_t q = 0; q < lat.size(); ++q) gamma[q] = gamma_prime_v(lat, q, at_h, at_hx, conv);
      for (std::size_t p = 0; p < lat.size(); ++p) {
        int rhs = 0;
        for (std::size_t q = 0; q < lat.size(); ++q)
          if (lat.contains(q, p)) rhs += parity(lat.d(q)) * tau_hat_v(lat, p, q, at_h) * gamma[q];
        ++rep.cases;
        if (rhs != tau_hat_v(lat, p, lat.full(), at_hx))
          rep.fail("n=" + std::to_string(m) + " P=" + lat[p].str() + " H=" + point_str(h) + " X=" + point_str(x));
      }
    }
  }
  return rep;
}

// Half-width, in the coordinates alpha(H), alpha in Delta_Q, of a box that
// contains the support of H -> Gamma'_Q(H,X).
inline Q support_radius(const Lattice& lat, std::size_t q, const Vec<Q>& x) {
  Q mx = 0;
  for (auto id : lat.root_ids(q, lat.full())) {
    Q v = abs(pair(lat.functionals()[id], x));
    if (v > mx) mx = v;
  }
  return 2 * lat.d(q) * mx + 1;
}

// The point sum_j a_j varpi_j, where varpi_j runs over hat Delta_Q; it has
// alpha_j(H) = a_j.
inline Vec<Q> from_root_coords(const Lattice& lat, std::size_t q, const std::vector<Q>& a) {
  Vec<Q> h(static_cast<std::size_t>(lat.n() + 1), Q(0));
  const auto& ids = lat.coweight_ids(q, lat.full());
  for (std::size_t j = 0; j < ids.size(); ++j)
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += a[j] * lat.functionals()[ids[j]][i];
  return h;
}

// Gamma'_Q(., X) and its values: {-1,0,1} and zero outside the support box.
inline CheckReport verify_gamma_support(int n, long samples, std::uint64_t seed) {
  CheckReport rep{"gamma_support", "Gamma'_Q(., X) vanishes outside a box computed from alpha(X)", 0, 0, 0, {}};
  Rng rng(seed);
  for (int m = 1; m <= n; ++m) {
    Lattice lat(m);
    for (std::size_t q = 0; q < lat.size(); ++q) {
      if (q == lat.full()) continue;
      for (long t = 0; t < samples; ++t) {
        Vec<Q> x = random_point(rng, static_cast<std::size_t>(m + 1), 20, 3);
        const Q rad = support_radius(lat, q, x);
        std::vector<Q> a;
        for (int j = 0; j < lat.d(q); ++j) a.push_back(random_q(rng, 1000, 7) * rad / 100);
        std::uniform_int_distribution<int> pick(0, lat.d(q) - 1);
        auto& far = a[static_cast<std::size_t>(pick(rng))];
        far = (::sgn(far) >= 0 ? 1 : -1) * (rad + abs(far) + Q(1, 3));
        Vec<Q> h = from_root_coords(lat, q, a);
        const int g = gamma_prime(lat, lat[q], h, x, GammaSign::arthur);
        ++rep.cases;
        if (g != 0) rep.fail("n=" + std::to_string(m) + " Q=" + lat[q].str() + " H=" + point_str(h) + " X=" + point_str(x));
        Vec<Q> inside = generic_point(lat, rng, rep, &x);
        for (auto& c : inside) c /= 50;
        const int gi = gamma_prime(lat, lat[q], inside, x, GammaSign::arthur);
        ++rep.cases;
        if (gi < -1 || gi > 1) rep.fail("value " + std::to_string(gi) + " outside {-1,0,1}");
      }
    }
  }
  return rep;
}

}  // namespace jr
