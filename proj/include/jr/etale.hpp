#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace jr {

// Product of fields F[T]/(Q_i) for pairwise coprime separable monic Q_i.
// Elements are stored componentwise as reduced residues.
template <class T>
class EtaleAlgebra {
 public:
  using Element = std::vector<Poly<T>>;

  EtaleAlgebra() = default;
  explicit EtaleAlgebra(std::vector<Poly<T>> factors) : f_(std::move(factors)) {
    if (f_.empty()) throw std::invalid_argument("etale algebra: no factors");
    like_ = f_[0].lead();
    mod_ = Poly<T>::constant(field<T>::one(like_));
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (f_[i].degree() < 1) throw std::invalid_argument("etale algebra: constant factor");
      if (f_[i].lead() != field<T>::one(like_)) throw std::invalid_argument("etale algebra: factor not monic");
      if (!is_separable(f_[i])) throw std::invalid_argument("etale algebra: inseparable factor");
      for (std::size_t j = 0; j < i; ++j)
        if (gcd(f_[i], f_[j]).degree() > 0) throw std::invalid_argument("etale algebra: factors not coprime");
      mod_ *= f_[i];
    }
    for (std::size_t i = 0; i < f_.size(); ++i) {
      Poly<T> rest = divmod(mod_, f_[i]).first;
      idem_.push_back((rest * inverse_mod(rest, f_[i])) % mod_);
    }
  }

  std::size_t count() const { return f_.size(); }
  const Poly<T>& factor(std::size_t i) const { return f_.at(i); }
  const std::vector<Poly<T>>& factors() const { return f_; }
  const Poly<T>& modulus() const { return mod_; }
  int degree() const { return mod_.degree(); }

  Element reduce(const Poly<T>& g) const {
    Element e;
    for (const auto& q : f_) e.push_back(g % q);
    return e;
  }
  // CRT lift to F[T]/(prod Q_i)
  Poly<T> lift(const Element& e) const {
    check(e);
    Poly<T> acc;
    for (std::size_t i = 0; i < f_.size(); ++i) acc += e[i] * idem_[i];
    return acc % mod_;
  }

  Element zero() const { return Element(f_.size()); }
  Element one() const { return reduce(Poly<T>::constant(field<T>::one(like_))); }
  Element generator() const { return reduce(Poly<T>::x(like_)); }
  Element idempotent(std::size_t i) const {
    Element e = zero();
    e.at(i) = Poly<T>::constant(field<T>::one(like_));
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    check(a), check(b);
    Element r(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    check(a), check(b);
    Element r(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  Element mul(const Element& a, const Element& b) const {
    check(a), check(b);
    Element r(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) r[i] = (a[i] * b[i]) % f_[i];
    return r;
  }

  T trace(const Element& a) const {
    check(a);
    T acc = field<T>::zero(like_);
    for (std::size_t i = 0; i < f_.size(); ++i) acc += trace_mod(a[i], f_[i]);
    return acc;
  }

  bool component_zero(const Element& a, std::size_t i) const { return a.at(i).is_zero(); }

  // F_{-I}: factors (-1)^{deg} Q_i(-T)
  EtaleAlgebra negated() const {
    std::vector<Poly<T>> g;
    for (const auto& q : f_) {
      Poly<T> h = q.negate_variable();
      g.push_back(q.degree() % 2 ? -h : h);
    }
    return EtaleAlgebra(std::move(g));
  }

  // T -> -T, from this algebra to negated()
  Element iota(const Element& a) const {
    check(a);
    EtaleAlgebra neg = negated();
    Element r;
    for (std::size_t i = 0; i < f_.size(); ++i) r.push_back(a[i].negate_variable() % neg.f_[i]);
    return r;
  }

 private:
  void check(const Element& e) const {
    if (e.size() != f_.size()) throw std::invalid_argument("etale element: wrong number of components");
  }

  std::vector<Poly<T>> f_;
  Poly<T> mod_;
  std::vector<Poly<T>> idem_;
  T like_{};
};

}  // namespace jr
