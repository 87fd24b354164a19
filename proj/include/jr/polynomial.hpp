#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace jr {

// Univariate polynomial, coefficients lowest degree first, never with a zero
// leading coefficient.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  static Poly monomial(const T& a, std::size_t deg) {
    std::vector<T> c(deg + 1, field<T>::zero(a));
    c[deg] = a;
    return Poly(std::move(c));
  }
  // t, using `like` for the modulus
  static Poly x(const T& like = T{}) { return monomial(field<T>::one(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& lead() const { return c_.back(); }
  // coefficient of t^i, zero past the degree
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_like(); }

  T eval(const T& x) const {
    T acc = zero_like();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field<T>::from_int(static_cast<long>(i), c_[i]) * c_[i]);
    return Poly(std::move(d));
  }

  // g(-t)
  Poly negate_variable() const {
    std::vector<T> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Poly(std::move(c));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    T l = lead();
    for (auto& a : r.c_) a = a / l;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coef_or(i, b) + b.coef_or(i, a);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coef_or(i, b) - b.coef_or(i, a);
    return Poly(std::move(c));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.size() + b.size() - 1, field<T>::zero(a.c_[0]));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const T& a = c_[static_cast<std::size_t>(i)];
      if (field<T>::is_zero(a)) continue;
      std::string s = field<T>::str(a);
      bool neg = !s.empty() && s[0] == '-';
      if (neg) s = s.substr(1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (i == 0) out += s;
      else {
        if (s != "1") out += s + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field<T>::is_zero(c_.back())) c_.pop_back();
  }
  T zero_like() const { return c_.empty() ? T{} : field<T>::zero(c_[0]); }
  T coef_or(std::size_t i, const Poly& other) const {
    if (i < c_.size()) return c_[i];
    return other.c_.empty() ? T{} : field<T>::zero(other.c_[0]);
  }

  std::vector<T> c_;
};

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), field<T>::zero(b.lead()));
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    T f = r[k + db] / b.lead();
    q[k] = f;
    if (field<T>::is_zero(f)) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

// Monic gcd (zero if both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// (g, s, t) with s a + t b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> xgcd(const Poly<T>& a, const Poly<T>& b) {
  T like = !a.is_zero() ? a.lead() : b.lead();
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(field<T>::one(like)), s1;
  Poly<T> t0, t1 = Poly<T>::constant(field<T>::one(like));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = field<T>::one(like) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

// Inverse of a modulo m; throws when they share a factor.
template <class T>
Poly<T> inverse_mod(const Poly<T>& a, const Poly<T>& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (g.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  return s % m;
}

template <class T>
bool is_separable(const Poly<T>& f) {
  if (f.is_zero()) throw std::invalid_argument("is_separable: zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

// det(tI - M) by reduction to Hessenberg form and the standard three-term
// recurrence on leading principal blocks.
template <class T>
Poly<T> charpoly(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("charpoly: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) {
    if constexpr (std::is_same_v<T, Q>) return Poly<T>::constant(Q(1));
    else throw std::invalid_argument("charpoly: empty prime-field matrix");
  }
  const T like = m(0, 0);
  Matrix<T> h = m;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && field<T>::is_zero(h(piv, c))) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    for (std::size_t r = c + 2; r < n; ++r) {
      if (field<T>::is_zero(h(r, c))) continue;
      T u = h(r, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(c + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) += u * h(i, r);
    }
  }
  const Poly<T> t = Poly<T>::x(like);
  std::vector<Poly<T>> p(n + 1);
  p[0] = Poly<T>::constant(field<T>::one(like));
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - Poly<T>::constant(h(k - 1, k - 1))) * p[k - 1];
    T prod = field<T>::one(like);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      p[k] -= (prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

// Coefficient vector of g mod `mod`, padded to deg(mod) entries.
template <class T>
Vec<T> residue_coeffs(const Poly<T>& g, const Poly<T>& mod) {
  Poly<T> r = g % mod;
  Vec<T> out(static_cast<std::size_t>(mod.degree()), field<T>::zero(mod.lead()));
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

// Trace of multiplication by g on F[t]/(mod).
template <class T>
T trace_mod(const Poly<T>& g, const Poly<T>& mod) {
  T acc = field<T>::zero(mod.lead());
  Poly<T> basis = Poly<T>::constant(field<T>::one(mod.lead()));
  const Poly<T> t = Poly<T>::x(mod.lead());
  for (int i = 0; i < mod.degree(); ++i) {
    acc += ((g * basis) % mod)[static_cast<std::size_t>(i)];
    basis = (basis * t) % mod;
  }
  return acc;
}

inline Poly<Fp> reduce_mod(const Poly<Q>& f, std::uint32_t p) {
  std::vector<Fp> c;
  for (const auto& a : f.coeffs()) c.push_back(reduce_mod(a, p));
  return Poly<Fp>(std::move(c));
}

// Irreducibility over F_p for small degree by trial division by every monic
// polynomial of degree at most deg/2.
inline bool is_irreducible_small(const Poly<Fp>& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const std::uint32_t p = f.lead().modulus();
  for (int e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Fp> c;
      std::uint64_t x = code;
      for (int i = 0; i < e; ++i) {
        c.push_back(Fp(static_cast<std::int64_t>(x % p), p));
        x /= p;
      }
      c.push_back(Fp(1, p));
      if ((f % Poly<Fp>(std::move(c))).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace jr
