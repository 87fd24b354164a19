#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>

namespace jr {

using Q = mpq_class;

// Residue class mod a prime. A modulus of 0 marks the untyped zero produced by
// default construction; it adopts the modulus of whatever it is combined with.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: modulus must be positive");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    auto p = common(a, b);
    return raw((static_cast<std::uint64_t>(a.v_) + b.v_) % p, p);
  }
  friend Fp operator-(Fp a, Fp b) {
    auto p = common(a, b);
    return raw((static_cast<std::uint64_t>(a.v_) + p - b.v_) % p, p);
  }
  friend Fp operator*(Fp a, Fp b) {
    auto p = common(a, b);
    return raw(static_cast<std::uint64_t>(a.v_) * b.v_ % p, p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return p_ ? raw((p_ - v_) % p_, p_) : *this; }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && (a.p_ == b.p_ || !a.p_ || !b.p_); }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

 private:
  static std::uint64_t common(Fp a, Fp b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::domain_error("Fp: mixed moduli");
    auto p = a.p_ ? a.p_ : b.p_;
    if (!p) throw std::domain_error("Fp: arithmetic on untyped residues");
    return p;
  }
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = static_cast<std::uint32_t>(v);
    r.p_ = static_cast<std::uint32_t>(p);
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

// Uniform access to constants for the two scalar domains. `like` carries the
// modulus for prime fields and is ignored for rationals.
template <class T>
struct field;

template <>
struct field<Q> {
  static Q zero(const Q& = Q{}) { return Q(0); }
  static Q one(const Q& = Q{}) { return Q(1); }
  static Q from_int(long k, const Q& = Q{}) { return Q(k); }
  static bool is_zero(const Q& x) { return sgn(x) == 0; }
  static std::string str(const Q& x) { return x.get_str(); }
};

template <>
struct field<Fp> {
  static Fp zero(const Fp& like) { return like.modulus() ? Fp(0, like.modulus()) : Fp(); }
  static Fp one(const Fp& like) { return Fp(1, like.modulus()); }
  static Fp from_int(long k, const Fp& like) { return Fp(k, like.modulus()); }
  static bool is_zero(const Fp& x) { return x.value() == 0; }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Parses "a" or "a/b" (optional sign on a) into lowest terms.
inline Q parse_q(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("not a rational: '" + text + "'");
  mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Q r(num, den);
  r.canonicalize();
  return r;
}

// a/b in lowest terms
inline Q frac(long a, long b) {
  if (b == 0) throw std::domain_error("frac: zero denominator");
  Q r(a, b);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Q& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

inline Fp reduce_mod(const Q& x, std::uint32_t p) {
  mpz_class pp(p);
  mpz_class den = x.get_den() % pp;
  if (den == 0) throw std::domain_error("prime divides a denominator");
  mpz_class num = x.get_num() % pp;
  if (num < 0) num += pp;
  return Fp(static_cast<std::int64_t>(num.get_si()), p) / Fp(den.get_si(), p);
}

inline double to_double(const Q& x) { return x.get_d(); }

}  // namespace jr
