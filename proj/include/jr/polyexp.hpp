#pragma once

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cones.hpp"
#include "parabolics.hpp"

namespace jr {

// Multivariate polynomial with rational coefficients, keyed by exponent
// vectors; zero coefficients are never stored.
class MPoly {
 public:
  using Mono = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::size_t dim) : dim_(dim) {}
  static MPoly constant(std::size_t dim, const Q& c) {
    MPoly p(dim);
    p.add_term(Mono(dim, 0), c);
    return p;
  }
  static MPoly variable(std::size_t dim, std::size_t i) {
    Mono m(dim, 0);
    m.at(i) = 1;
    MPoly p(dim);
    p.add_term(m, Q(1));
    return p;
  }

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, Q>& terms() const { return t_; }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Mono& m, const Q& c) {
    if (m.size() != dim_) throw std::invalid_argument("MPoly: monomial dimension mismatch");
    if (::sgn(c) == 0) return;
    auto& slot = t_[m];
    slot += c;
    if (::sgn(slot) == 0) t_.erase(m);
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    check(a, b);
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check(a, b);
    MPoly r(a.dim_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m(a.dim_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const Q& s, const MPoly& a) {
    MPoly r(a.dim_);
    for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.dim_ == b.dim_ && a.t_ == b.t_; }

  Q eval(const Vec<Q>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("MPoly::eval: dimension mismatch");
    Q acc = 0;
    for (const auto& [m, c] : t_) {
      Q term = c;
      for (std::size_t i = 0; i < dim_; ++i)
        for (int e = 0; e < m[i]; ++e) term *= v[i];
      acc += term;
    }
    return acc;
  }
  double eval(const std::vector<double>& v) const {
    double acc = 0;
    for (const auto& [m, c] : t_) {
      double term = c.get_d();
      for (std::size_t i = 0; i < dim_; ++i) term *= std::pow(v[i], m[i]);
      acc += term;
    }
    return acc;
  }

 private:
  static void check(const MPoly& a, const MPoly& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("MPoly: dimension mismatch");
  }
  std::size_t dim_ = 0;
  std::map<Mono, Q> t_;
};

// f(v) = sum_lambda e^{lambda(v)} P_lambda(v) on Q^dim.
class PolyExp {
 public:
  PolyExp() = default;
  explicit PolyExp(std::size_t dim) : dim_(dim) {}

  static PolyExp exp(const Vec<Q>& lambda, const MPoly& p) {
    PolyExp f(lambda.size());
    f.add_term(lambda, p);
    return f;
  }
  static PolyExp polynomial(const MPoly& p) { return exp(Vec<Q>(p.dim(), Q(0)), p); }

  std::size_t dim() const { return dim_; }
  const std::map<Vec<Q>, MPoly>& terms() const { return t_; }

  void add_term(const Vec<Q>& lambda, const MPoly& p) {
    if (lambda.size() != dim_ || p.dim() != dim_) throw std::invalid_argument("PolyExp: dimension mismatch");
    auto it = t_.find(lambda);
    MPoly sum = it == t_.end() ? p : it->second + p;
    if (sum.is_zero()) {
      if (it != t_.end()) t_.erase(it);
    } else {
      t_[lambda] = sum;
    }
  }

  friend PolyExp operator+(const PolyExp& a, const PolyExp& b) {
    check(a, b);
    PolyExp r = a;
    for (const auto& [l, p] : b.t_) r.add_term(l, p);
    return r;
  }
  friend PolyExp operator*(const PolyExp& a, const PolyExp& b) {
    check(a, b);
    PolyExp r(a.dim_);
    for (const auto& [la, pa] : a.t_)
      for (const auto& [lb, pb] : b.t_) {
        Vec<Q> l(a.dim_);
        for (std::size_t i = 0; i < l.size(); ++i) l[i] = la[i] + lb[i];
        r.add_term(l, pa * pb);
      }
    return r;
  }
  friend bool operator==(const PolyExp& a, const PolyExp& b) { return a.dim_ == b.dim_ && a.t_ == b.t_; }

  // the polynomial attached to the exponent 0
  MPoly pure_poly_part() const {
    auto it = t_.find(Vec<Q>(dim_, Q(0)));
    return it == t_.end() ? MPoly(dim_) : it->second;
  }

  double eval(const std::vector<double>& v) const {
    double acc = 0;
    for (const auto& [l, p] : t_) {
      double e = 0;
      for (std::size_t i = 0; i < dim_; ++i) e += l[i].get_d() * v[i];
      acc += std::exp(e) * p.eval(v);
    }
    return acc;
  }
  // Exact evaluation with e^{lambda(v)} kept as a formal generator: returns
  // the map lambda(v) -> sum of P_lambda(v) over the exponents with that value.
  std::map<Q, Q> eval_formal(const Vec<Q>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("PolyExp::eval_formal: dimension mismatch");
    std::map<Q, Q> out;
    for (const auto& [l, p] : t_) {
      Q e = 0;
      for (std::size_t i = 0; i < dim_; ++i) e += l[i] * v[i];
      out[e] += p.eval(v);
    }
    for (auto it = out.begin(); it != out.end();) it = ::sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  static void check(const PolyExp& a, const PolyExp& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("PolyExp: dimension mismatch");
  }
  std::size_t dim_ = 0;
  std::map<Vec<Q>, MPoly> t_;
};

// p_{Q,s}(X) at rank one, in the variable xi = alpha(X):
//   p = (v/j) (e^{a xi} - 1)/a,  a = rho_{Q,s}(varpi^vee),
// and p = (v/j) xi when a = 0.
struct RankOneValue {
  Q a;         // rho_{Q,s}(varpi^vee)
  Q xi;        // alpha(X)
  Q scale_sq;  // (v/j)^2
  bool degenerate = false;

  double scale() const { return std::sqrt(scale_sq.get_d()); }
  // constant term and coefficient of e^{a xi}
  double constant_term() const { return degenerate ? 0.0 : -scale() / a.get_d(); }
  double exp_coefficient() const { return degenerate ? 0.0 : scale() / a.get_d(); }
  double value() const {
    if (degenerate) return scale() * xi.get_d();
    return scale() * std::expm1(a.get_d() * xi.get_d()) / a.get_d();
  }
  // p / (v/j) as a polynomial-exponential in xi
  PolyExp normalized() const {
    if (degenerate) return PolyExp::polynomial(MPoly::variable(1, 0));
    PolyExp f(1);
    f.add_term({Q(0)}, MPoly::constant(1, -1 / a));
    f.add_term({a}, MPoly::constant(1, 1 / a));
    return f;
  }
};

inline RankOneValue p_Q_s_rank1(const RelStdParabolic& q, const Q& s, const Vec<Q>& x, bool allow_degenerate = false) {
  if (q.d() != 1) throw std::invalid_argument("p_Q_s_rank1: " + q.str() + " is not of rank one");
  if (x.size() != static_cast<std::size_t>(q.n + 1)) throw std::invalid_argument("p_Q_s_rank1: point dimension");
  auto rd = root_data(q, full_parabolic(q.n));
  const Weight& alpha = rd.roots.at(0);
  const Weight& varpi = rd.coweights.at(0);
  RankOneValue r;
  r.a = pair(rho_Q_s(q), varpi).eval(s);
  r.xi = pair(alpha, x);
  r.scale_sq = pair(varpi, varpi) / jacobian_sq(q);
  r.degenerate = ::sgn(r.a) == 0;
  if (r.degenerate && !allow_degenerate)
    throw std::domain_error("p_Q_s_rank1: rho_{Q,s}(varpi) vanishes at s = " + s.get_str());
  return r;
}

namespace detail {

// Solves m^T lambda = e_0 for lambda when the rows of m are independent.
inline std::optional<Vec<Q>> row_combination(const std::vector<Vec<Q>>& rows) {
  const std::size_t r = rows.size(), m = rows[0].size();
  Matrix<Q> aug(m, r + 1, Q(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = rows[j][i];
    aug(i, r) = i == 0 ? 1 : 0;
  }
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c <= r && row < m; ++c) {
    std::size_t p = row;
    while (p < m && ::sgn(aug(p, c)) == 0) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j <= r; ++j) std::swap(aug(p, j), aug(row, j));
    Q inv = 1 / aug(row, c);
    for (std::size_t j = 0; j <= r; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || ::sgn(aug(i, c)) == 0) continue;
      Q f = aug(i, c);
      for (std::size_t j = 0; j <= r; ++j) aug(i, j) -= f * aug(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  if (piv.size() != r) return std::nullopt;  // dependent rows or inconsistent
  if (!piv.empty() && piv.back() == r) return std::nullopt;
  Vec<Q> lambda(r);
  for (std::size_t i = 0; i < r; ++i) lambda[i] = aug(i, r);
  return lambda;
}

struct Hyperplane {
  Vec<Q> normal;  // in z coordinates
  Q c;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.c < b.c;
  }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.normal == b.normal && a.c == b.c; }
};

// breakpoint z_i = b[0] + sum_{j<i} b[j+1] z_j
using BreakForm = Vec<Q>;

}  // namespace detail

struct QuadratureResult {
  double value = 0;
  double error = 0;
  Q radius;  // support half-width in alpha coordinates
  bool enlarged = false;
  int dim = 0;
};

// Numerical evaluation of the defining integral
//   p_{Q,s}(X) = int_{a^st_Q} e^{(s det + 2 rho_Q~ - 2 rho_Q)(H)} Gamma'_Q(H,X) dH
// on a^st_Q with the Lebesgue measure of the standard form. The integrand is
// piecewise (constant x exponential) with pieces cut by the hyperplanes of
// the cones defining Gamma'; the innermost direction is integrated in closed
// form between cuts and the outer directions by Gauss-Kronrod between cuts.
inline QuadratureResult p_Q_s_quadrature(const Lattice& lat, std::size_t qi, double s, const Vec<Q>& x,
                                         double tol = 1e-11, GammaSign conv = GammaSign::arthur) {
  const RelStdParabolic& q = lat[qi];
  const int d = q.d();
  if (d > 3) throw std::invalid_argument("p_Q_s_quadrature: rank above 3 is not supported");
  QuadratureResult res;
  res.dim = d;
  const std::size_t dimh = static_cast<std::size_t>(q.n + 1);
  if (d == 0) {
    res.value = gamma_prime(lat, q, Vec<Q>(dimh, Q(0)), x, conv);
    return res;
  }
  const auto basis = a_st_basis(q);
  double measure = 1;
  for (const auto& b : basis) measure *= std::sqrt(pair(b, b).get_d());

  // exponent rho_{Q,s} on the basis
  const AffineWeight rho = rho_Q_s(q);
  std::vector<double> kappa;
  for (const auto& b : basis) kappa.push_back(pair(rho, b).eval(Q(0)).get_d() + s * pair(rho.s, b).get_d());

  // cutting hyperplanes
  const auto xvals = lat.evaluate(x);
  std::set<detail::Hyperplane> hs;
  for (std::size_t r = 0; r < lat.size(); ++r) {
    if (!lat.contains(r, qi)) continue;
    for (auto id : lat.root_ids(qi, r)) {
      detail::Hyperplane h;
      for (const auto& b : basis) h.normal.push_back(pair(lat.functionals()[id], b));
      h.c = 0;
      hs.insert(h);
    }
    for (auto id : lat.coweight_ids(r, lat.full())) {
      detail::Hyperplane h;
      for (const auto& b : basis) h.normal.push_back(pair(lat.functionals()[id], b));
      h.c = xvals[id];
      if (std::any_of(h.normal.begin(), h.normal.end(), [](const Q& v) { return ::sgn(v) != 0; })) hs.insert(h);
    }
  }
  std::vector<detail::Hyperplane> planes(hs.begin(), hs.end());

  // breakpoint forms per level
  std::vector<std::vector<detail::BreakForm>> forms(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::set<detail::BreakForm> fs;
    const int m = d - i;
    const std::size_t np = planes.size();
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (!pick.empty()) {
        std::vector<Vec<Q>> rows;
        for (auto p : pick) rows.emplace_back(planes[p].normal.begin() + i, planes[p].normal.end());
        if (auto lam = detail::row_combination(rows)) {
          detail::BreakForm f(static_cast<std::size_t>(i + 1), Q(0));
          for (std::size_t t = 0; t < pick.size(); ++t) {
            f[0] += (*lam)[t] * planes[pick[t]].c;
            for (int j = 0; j < i; ++j) f[static_cast<std::size_t>(j + 1)] -= (*lam)[t] * planes[pick[t]].normal[static_cast<std::size_t>(j)];
          }
          fs.insert(f);
        }
      }
      if (static_cast<int>(pick.size()) == m) return;
      for (std::size_t p = start; p < np; ++p) {
        pick.push_back(p);
        rec(p + 1);
        pick.pop_back();
      }
    };
    rec(0);
    std::vector<detail::BreakForm> fl(fs.begin(), fs.end());
    forms[static_cast<std::size_t>(i)] = fl;
  }
  std::vector<std::vector<std::vector<double>>> forms_d(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& f : forms[i]) {
      std::vector<double> v;
      for (const auto& c : f) v.push_back(c.get_d());
      forms_d[i].push_back(v);
    }

  // box in z coordinates around the support parallelotope |alpha_j(H)| <= R
  const auto& rids = lat.root_ids(qi, lat.full());
  Matrix<Q> amat(static_cast<std::size_t>(d), static_cast<std::size_t>(d), Q(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) amat(a, b) = pair(lat.functionals()[rids[static_cast<std::size_t>(a)]], basis[static_cast<std::size_t>(b)]);
  const Matrix<Q> ainv = *inverse(amat);

  auto gamma_at = [&](const std::vector<double>& z) {
    std::vector<double> h(dimh, 0.0);
    for (int j = 0; j < d; ++j)
      for (std::size_t t = 0; t < dimh; ++t) h[t] += z[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)][t].get_d();
    auto at_h = lat.evaluate(h);
    std::vector<double> at_hx(at_h.size());
    for (std::size_t t = 0; t < at_h.size(); ++t) at_hx[t] = at_h[t] - xvals[t].get_d();
    return gamma_prime_v(lat, qi, at_h, at_hx, conv);
  };

  auto support_ok = [&](const Q& rad) {
    // Gamma' must vanish just outside every face of the parallelotope.
    Rng rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double r = rad.get_d();
    for (int t = 0; t < 400; ++t) {
      std::vector<double> a(static_cast<std::size_t>(d));
      for (auto& c : a) c = u(rng) * r * 1.05;
      a[static_cast<std::size_t>(t % d)] = ((t / d) % 2 ? -1.0 : 1.0) * r * (1.0 + 1e-3);
      std::vector<double> z(static_cast<std::size_t>(d), 0.0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z[static_cast<std::size_t>(i)] += ainv(i, j).get_d() * a[static_cast<std::size_t>(j)];
      if (gamma_at(z) != 0) return false;
    }
    return true;
  };

  Q rad = support_radius(lat, qi, x);
  if (!support_ok(rad)) {
    rad *= 2;
    res.enlarged = true;
    if (!support_ok(rad)) throw std::runtime_error("p_Q_s_quadrature: support box did not contain Gamma' after one enlargement");
  }
  res.radius = rad;
  std::vector<double> lo(static_cast<std::size_t>(d), 0.0), hi(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < d; ++i) {
    double w = 0;
    for (int j = 0; j < d; ++j) w += std::abs(ainv(i, j).get_d());
    lo[static_cast<std::size_t>(i)] = -w * rad.get_d() * 1.01;
    hi[static_cast<std::size_t>(i)] = w * rad.get_d() * 1.01;
  }

  auto cuts = [&](int i, const std::vector<double>& z) {
    std::vector<double> c{lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)]};
    for (const auto& f : forms_d[static_cast<std::size_t>(i)]) {
      double v = f[0];
      for (int j = 0; j < i; ++j) v += f[static_cast<std::size_t>(j + 1)] * z[static_cast<std::size_t>(j)];
      if (v > c[0] && v < c[1]) c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    std::vector<double> out;
    for (double v : c)
      if (out.empty() || v - out.back() > 1e-12 * (1 + std::abs(v))) out.push_back(v);
    return out;
  };

  double err_total = 0;
  std::function<double(int, std::vector<double>&)> level = [&](int i, std::vector<double>& z) -> double {
    auto c = cuts(i, z);
    double acc = 0;
    double base = 0;
    for (int j = 0; j < i; ++j) base += kappa[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t + 1 < c.size(); ++t) {
      const double a = c[t], b = c[t + 1];
      if (i == d - 1) {
        z[static_cast<std::size_t>(i)] = 0.5 * (a + b);
        const int g = gamma_at(z);
        if (g == 0) continue;
        const double k = kappa[static_cast<std::size_t>(i)];
        double piece;
        if (std::abs(k) < 1e-300) piece = (b - a);
        else piece = std::exp(k * a) * std::expm1(k * (b - a)) / k;
        acc += g * std::exp(base) * piece;
      } else {
        double err = 0;
        auto f = [&](double zi) {
          std::vector<double> zz = z;
          zz[static_cast<std::size_t>(i)] = zi;
          return level(i + 1, zz);
        };
        acc += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 8, tol, &err);
        err_total += err;
      }
    }
    return acc;
  };
  std::vector<double> z(static_cast<std::size_t>(d), 0.0);
  res.value = measure * level(0, z);
  res.error = measure * err_total;
  return res;
}

// Constant term of p_{Q,s} isolated numerically: at X = -t rho_{Q,s} every
// exponent rho_{R,s}(X_R), R != G~, is at most mu = -25; p is evaluated at X
// and 2X and the model c + b e^{mu u} (u = 1, 2) is solved for c.
struct ConstantTermFit {
  Vec<Q> x;
  double mu = 0;
  double p1 = 0, p2 = 0;
  double constant = 0;
  double with_j = 0;     // (-1)^d j^{-1} theta_hat(rho)^{-1}
  double without_j = 0;  // (-1)^d theta_hat(rho)^{-1}
  std::string winner;
  double error = 0;  // |constant - winner value|
};

inline ConstantTermFit fit_constant_term(const Lattice& lat, std::size_t qi, const Q& s, double tol = 1e-11) {
  const RelStdParabolic& q = lat[qi];
  if (q.is_full()) throw std::invalid_argument("fit_constant_term: needs a proper parabolic");
  const AffineWeight rho = rho_Q_s(q);
  Weight rv(rho.c.size());
  for (std::size_t i = 0; i < rv.size(); ++i) rv[i] = rho.c[i] + s * rho.s[i];
  Q min_norm = -1;
  for (std::size_t r = 0; r < lat.size(); ++r) {
    if (r == lat.full() || !lat.contains(r, qi)) continue;
    Vec<Q> pr = project(lat[r], rv);
    Q nrm = pair(pr, pr);
    if (::sgn(nrm) == 0) throw std::domain_error("fit_constant_term: rho_{Q,s} vanishes on some a_R");
    if (min_norm < 0 || nrm < min_norm) min_norm = nrm;
  }
  const Q t = Q(25) / min_norm;
  ConstantTermFit fit;
  for (const auto& c : rv) fit.x.push_back(-t * c);
  fit.mu = -25.0;
  Vec<Q> x2 = fit.x;
  for (auto& c : x2) c *= 2;
  fit.p1 = p_Q_s_quadrature(lat, qi, s.get_d(), fit.x, tol).value;
  fit.p2 = p_Q_s_quadrature(lat, qi, s.get_d(), x2, tol).value;
  const double e = std::exp(fit.mu);
  const double b = (fit.p2 - fit.p1) / (e * e - e);
  fit.constant = fit.p1 - b * e;

  auto th = theta_hat(q, rho);
  const double theta = th.product.eval(s).get_d() / std::sqrt(th.v_sq.get_d());
  const double sign = q.d() % 2 ? -1.0 : 1.0;
  fit.without_j = sign / theta;
  fit.with_j = sign / (std::sqrt(jacobian_sq(q).get_d()) * theta);
  const double ej = std::abs(fit.constant - fit.with_j), en = std::abs(fit.constant - fit.without_j);
  fit.winner = ej <= en ? "with_j" : "without_j";
  fit.error = std::min(ej, en);
  return fit;
}

}  // namespace jr
