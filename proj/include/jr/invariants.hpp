#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eps_subset.hpp"
#include "etale.hpp"
#include "exact_algebra.hpp"

namespace jr {

// X = [[B, u], [v, d]] with B acting on V and the last coordinate spanning D_0.
template <class T>
struct JRElement {
  Matrix<T> B;
  Vec<T> u;  // column
  Vec<T> v;  // row
  T d{};

  std::size_t n() const { return B.rows(); }
  friend bool operator==(const JRElement& x, const JRElement& y) {
    return x.B == y.B && x.u == y.u && x.v == y.v && x.d == y.d;
  }
};

template <class T>
JRElement<T> decompose(const Matrix<T>& x) {
  if (!x.square()) throw std::invalid_argument("decompose: non-square matrix");
  if (x.rows() < 2) throw std::invalid_argument("decompose: side must be at least 2");
  const std::size_t n = x.rows() - 1;
  JRElement<T> e;
  e.B = Matrix<T>(n, n, x(0, 0));
  e.u.resize(n);
  e.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.B(i, j) = x(i, j);
    e.u[i] = x(i, n);
    e.v[i] = x(n, i);
  }
  e.d = x(n, n);
  return e;
}

template <class T>
Matrix<T> compose(const JRElement<T>& e) {
  const std::size_t n = e.n();
  if (e.u.size() != n || e.v.size() != n) throw std::invalid_argument("compose: inconsistent blocks");
  Matrix<T> x(n + 1, n + 1, e.d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x(i, j) = e.B(i, j);
    x(i, n) = e.u[i];
    x(n, i) = e.v[i];
  }
  x(n, n) = e.d;
  return x;
}

template <class T>
struct ClassInvariants {
  Vec<T> A;   // A_0 = d, A_i = v B^{i-1} u
  Vec<T> Bc;  // B_j = Tr of the j-th exterior power of B
  friend bool operator==(const ClassInvariants& x, const ClassInvariants& y) { return x.A == y.A && x.Bc == y.Bc; }
  friend bool operator!=(const ClassInvariants& x, const ClassInvariants& y) { return !(x == y); }
};

template <class T>
ClassInvariants<T> invariants(const JRElement<T>& x) {
  const std::size_t n = x.n();
  ClassInvariants<T> c;
  c.A.push_back(x.d);
  Vec<T> w = x.u;
  for (std::size_t i = 1; i <= n; ++i) {
    c.A.push_back(dot(x.v, w));
    w = x.B * w;
  }
  if (n) {
    Poly<T> chi = charpoly(x.B);
    for (std::size_t j = 1; j <= n; ++j) {
      T a = chi[n - j];
      c.Bc.push_back(j % 2 ? -a : a);
    }
  }
  return c;
}

// det(v B^{i+j} u)_{0 <= i,j < n} != 0
template <class T>
bool is_regular_semisimple(const JRElement<T>& x) {
  const std::size_t n = x.n();
  if (n == 0) return true;
  std::vector<T> m;
  Vec<T> w = x.u;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    m.push_back(dot(x.v, w));
    w = x.B * w;
  }
  Matrix<T> a(n, n, x.d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i + j];
  return !field<T>::is_zero(det(a));
}

template <class T>
bool same_class(const JRElement<T>& x, const JRElement<T>& y) {
  if (x.n() != y.n()) throw std::invalid_argument("same_class: dimension mismatch");
  return invariants(x) == invariants(y);
}

// (g^{-1} B g, g^{-1} u, v g, d)
template <class T>
JRElement<T> act(const JRElement<T>& x, const Matrix<T>& g) {
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("act: singular group element");
  return {*gi * x.B * g, *gi * x.u, x.v * g, x.d};
}

template <class T>
std::vector<Vec<T>> cyclic_vector_candidates(std::size_t n, const T& like) {
  const T zero = field<T>::zero(like), one = field<T>::one(like);
  std::vector<Vec<T>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<T> e(n, zero);
    e[i] = one;
    out.push_back(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<T> e(n, zero);
      e[i] = e[j] = one;
      out.push_back(e);
    }
  out.emplace_back(n, one);
  for (long c = 2; c <= 16; ++c) {
    Vec<T> e(n, zero);
    T pw = one;
    for (std::size_t i = 0; i < n; ++i, pw *= field<T>::from_int(c, like)) e[i] = pw;
    out.push_back(e);
  }
  return out;
}

// Krylov basis P = [w, Bw, ...] for the first cyclic vector of the sweep.
template <class T>
Matrix<T> cyclic_module_iso(const Matrix<T>& b) {
  if (!b.square() || b.rows() == 0) throw std::invalid_argument("cyclic_module_iso: need a nonempty square matrix");
  for (const auto& w : cyclic_vector_candidates(b.rows(), b(0, 0))) {
    auto k = krylov_basis(b, w);
    if (k.rank == b.rows()) return k.basis;
  }
  throw std::logic_error("cyclic_module_iso: no cyclic vector found in the deterministic sweep");
}

template <class T>
Matrix<T> cyclic_module_iso(const Matrix<T>& b, const Vec<T>& w) {
  auto k = krylov_basis(b, w);
  if (k.rank != b.rows()) throw std::invalid_argument("cyclic_module_iso: vector is not cyclic");
  return k.basis;
}

// Transport of (u, v) into F_I x F_{-I} through the Krylov basis P:
// u' = P^{-1} u read in F[T]/(chi), and h = iota(v') is the element with
// Tr(T^i h) = (v P)_i, i.e. v(x) = Tr(x iota(v')).
template <class T>
struct Transport {
  EtaleAlgebra<T> algebra;
  Matrix<T> P;
  typename EtaleAlgebra<T>::Element u;      // in F_I
  typename EtaleAlgebra<T>::Element v;      // in F_{-I}
  typename EtaleAlgebra<T>::Element alpha;  // u * iota(v), in F_I
};

template <class T>
Poly<T> product(const std::vector<Poly<T>>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty factorization");
  Poly<T> p = Poly<T>::constant(field<T>::one(fs[0].lead()));
  for (const auto& f : fs) p *= f;
  return p;
}

template <class T>
void check_factorization(const Matrix<T>& b, const std::vector<Poly<T>>& factors) {
  Poly<T> chi = charpoly(b);
  if (!is_separable(chi)) throw std::invalid_argument("characteristic polynomial of B is not separable");
  if (product(factors) != chi) throw std::invalid_argument("factorization inconsistent with charpoly(B)");
}

template <class T>
Transport<T> transport(const Matrix<T>& b, const std::vector<Poly<T>>& factors, const Vec<T>& u, const Vec<T>& v,
                       const Matrix<T>* basis = nullptr) {
  check_factorization(b, factors);
  if (u.size() != b.rows() || v.size() != b.rows()) throw std::invalid_argument("transport: dimension mismatch");
  Transport<T> t{EtaleAlgebra<T>(factors), basis ? *basis : cyclic_module_iso(b), {}, {}, {}};
  if (basis && rank(*basis) != b.rows()) throw std::invalid_argument("transport: basis is singular");
  const Poly<T>& chi = t.algebra.modulus();
  const std::size_t n = b.rows();
  const T like = chi.lead();

  Poly<T> ug(solve(t.P, u));
  Vec<T> vp = v * t.P;
  Matrix<T> gram(n, n, field<T>::zero(like));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = trace_mod(Poly<T>::monomial(field<T>::one(like), i + j), chi);
  Poly<T> hg(solve(gram, vp));

  t.u = t.algebra.reduce(ug);
  auto h = t.algebra.reduce(hg);
  t.v = t.algebra.negated().iota(h);
  t.alpha = t.algebra.mul(t.u, t.algebra.negated().iota(t.v));
  return t;
}

template <class T>
typename EtaleAlgebra<T>::Element alpha_invariant(const Matrix<T>& b, const std::vector<Poly<T>>& factors,
                                                  const Vec<T>& u, const Vec<T>& v) {
  return transport(b, factors, u, v).alpha;
}

// Relatively regular semisimple class: B with separable characteristic
// polynomial, its factorization, alpha in F_I and the corner entry d.
template <class T>
struct RrssClassData {
  Matrix<T> B;
  EtaleAlgebra<T> algebra;
  typename EtaleAlgebra<T>::Element alpha;
  std::vector<int> I0;  // 1-based factor indices with alpha_i = 0
  T d{};
  Matrix<T> P;  // Krylov basis identifying V with F_I
  Vec<T> xi_u, xi_v;
  ClassInvariants<T> inv;

  std::size_t n() const { return B.rows(); }
};

template <class T>
JRElement<T> from_module(const RrssClassData<T>& c, const typename EtaleAlgebra<T>::Element& u_elem,
                         const typename EtaleAlgebra<T>::Element& h_elem) {
  const std::size_t n = c.n();
  const T like = c.algebra.modulus().lead();
  const Poly<T>& chi = c.algebra.modulus();
  Poly<T> ug = c.algebra.lift(u_elem), hg = c.algebra.lift(h_elem);
  Vec<T> ucoef = residue_coeffs(ug, chi);
  Vec<T> trace_row(n, field<T>::zero(like));
  for (std::size_t i = 0; i < n; ++i) trace_row[i] = trace_mod(Poly<T>::monomial(field<T>::one(like), i) * hg, chi);
  auto pinv = inverse(c.P);
  return {c.B, c.P * ucoef, trace_row * *pinv, c.d};
}

template <class T>
RrssClassData<T> build_rrss_class(const Matrix<T>& b, const std::vector<Poly<T>>& factors,
                                  const typename EtaleAlgebra<T>::Element& alpha, const T& d) {
  check_factorization(b, factors);
  RrssClassData<T> c;
  c.B = b;
  c.algebra = EtaleAlgebra<T>(factors);
  if (alpha.size() != factors.size()) throw std::invalid_argument("alpha: one component per factor required");
  for (std::size_t i = 0; i < factors.size(); ++i) c.alpha.push_back(alpha[i] % factors[i]);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (c.algebra.component_zero(c.alpha, i)) c.I0.push_back(static_cast<int>(i + 1));
  c.d = d;
  c.P = cyclic_module_iso(b);
  auto u_elem = c.algebra.zero();
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!c.algebra.component_zero(c.alpha, i)) u_elem[i] = Poly<T>::constant(field<T>::one(d));
  JRElement<T> xi = from_module(c, u_elem, c.alpha);
  c.xi_u = xi.u;
  c.xi_v = xi.v;
  c.inv = invariants(xi);
  return c;
}

// X_I = (B, xi_empty + 1_I, d): +i adds 1 to the u-component i, -i adds 1 to
// the v-component i.
template <class T>
JRElement<T> orbit_representative(const RrssClassData<T>& c, const EpsSubset& eps) {
  if (!eps.inside(c.I0)) throw std::invalid_argument("orbit_representative: " + eps.str() + " is not an eps-subset of I0");
  auto u_elem = c.algebra.zero();
  auto h_elem = c.alpha;
  const T one = field<T>::one(c.d);
  for (std::size_t i = 0; i < c.algebra.count(); ++i)
    if (!c.algebra.component_zero(c.alpha, i)) u_elem[i] = Poly<T>::constant(one);
  for (int s : eps.elements()) {
    auto i = static_cast<std::size_t>(std::abs(s) - 1);
    if (s > 0) u_elem[i] = Poly<T>::constant(one);
    else h_elem[i] = Poly<T>::constant(one);
  }
  return from_module(c, u_elem, h_elem);
}

}  // namespace jr
