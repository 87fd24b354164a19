#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eps_subset.hpp"
#include "parabolics.hpp"
#include "report.hpp"

namespace jr {

inline void require_eps_subset(const EpsSubset& j, const std::vector<int>& i0, const char* what) {
  if (!j.inside(i0)) throw std::invalid_argument(std::string(what) + ": " + j.str() + " is not an eps-subset of I0");
}

// Ordered set partitions of `atoms` (labels), as the sequence of blocks.
inline std::vector<std::vector<std::vector<int>>> ordered_set_partitions(const std::vector<int>& atoms) {
  std::vector<std::vector<std::vector<int>>> out;
  const std::size_t m = atoms.size();
  if (m == 0) return {{}};
  std::vector<std::size_t> f(m, 0);
  // f maps atoms to block numbers; keep those whose image is {0..b-1}
  for (;;) {
    std::size_t b = *std::max_element(f.begin(), f.end()) + 1;
    std::vector<bool> hit(b, false);
    for (auto v : f) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool x) { return x; })) {
      std::vector<std::vector<int>> blocks(b);
      for (std::size_t i = 0; i < m; ++i) blocks[f[i]].push_back(atoms[i]);
      out.push_back(blocks);
    }
    std::size_t i = 0;
    while (i < m && ++f[i] == m) f[i++] = 0;
    if (i == m) break;
  }
  return out;
}

// mu_J = sum of (-1)^{d_Q~} over the parabolics Q~ containing M_{I0~} with
// I_Q~ = J. Such parabolics are ordered set partitions of the atoms
// I0 u {*}, where * stands for the block F_{I \ I0} (+) D_0; atoms before the
// block of * contribute +i to I_Q~ and atoms after it contribute -i.
inline long mu(const EpsSubset& j, const std::vector<int>& i0) {
  require_eps_subset(j, i0, "mu");
  const int star = 0;
  std::vector<int> atoms = i0;
  atoms.push_back(star);
  long acc = 0;
  for (const auto& blocks : ordered_set_partitions(atoms)) {
    std::size_t sb = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (std::find(blocks[b].begin(), blocks[b].end(), star) != blocks[b].end()) sb = b;
    std::vector<int> e;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int a : blocks[b]) {
        if (b < sb) e.push_back(a);
        if (b > sb) e.push_back(-a);
      }
    if (EpsSubset(e) == j) acc += (blocks.size() - 1) % 2 ? -1 : 1;
  }
  return acc;
}

// a_i^m: chains empty = I_0 < I_1 < ... < I_i = {1..m}, i.e. i! S(m,i).
inline mpz_class ordered_partition_count(int i, int m) {
  if (i < 0 || m < 0) throw std::invalid_argument("ordered_partition_count: negative argument");
  mpz_class acc = 0;
  for (int k = 0; k <= i; ++k) {
    mpz_class binom, pw;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i - k), static_cast<unsigned long>(m));
    acc += (k % 2 ? -1 : 1) * binom * pw;
  }
  return acc;
}

// Point of a_{I0} given by its coordinates rho_i(H), i in I0.
using RhoPoint = std::map<int, Q>;

// 1_I(H): rho_i(H) <= 0 for i in I cap I0 and rho_i(H) < 0 for i in I cap -I0.
inline int indicator_1(const EpsSubset& i, const RhoPoint& h) {
  for (int e : i.elements()) {
    auto it = h.find(std::abs(e));
    if (it == h.end()) throw std::invalid_argument("indicator_1: no coordinate for index " + std::to_string(std::abs(e)));
    const int sg = ::sgn(it->second);
    if (e > 0 && sg > 0) return 0;
    if (e < 0 && sg <= 0) return 0;  // rho_{-i} = -rho_i < 0
  }
  return 1;
}

// An element of a_{I0,C}^* depending on s, given by lambda(e_j^vee), j in I0.
struct SFunctional {
  std::map<int, SPoly> at;

  SPoly on(int i) const {
    auto it = at.find(std::abs(i));
    if (it == at.end()) throw std::invalid_argument("SFunctional: no coordinate for index " + std::to_string(std::abs(i)));
    return i > 0 ? it->second : -it->second;
  }
  friend SFunctional operator+(SFunctional a, const SFunctional& b) {
    for (const auto& [j, p] : b.at) a.at[j] += p;
    return a;
  }
};

// s det, with det(e_j^vee) = 1
inline SFunctional s_det(const std::vector<int>& i0) {
  SFunctional f;
  for (int j : i0) f.at[j] = s_affine(Q(0), Q(1));
  return f;
}

// rho_I = sum_{i in I} rho_i, with rho_{-j} = -rho_j
inline SFunctional rho_of(const EpsSubset& i, const std::vector<int>& i0) {
  SFunctional f;
  for (int j : i0) f.at[j] = SPoly();
  for (int e : i.elements()) f.at[std::abs(e)] += SPoly::constant(Q(e > 0 ? 1 : -1));
  return f;
}

// num / den with an opaque scale (product of formal positive constants).
struct SRationalFn {
  bool zero = false;
  SPoly num;
  std::vector<SPoly> den_factors;  // affine in s
  std::vector<std::string> opaque;

  SPoly den() const {
    SPoly d = SPoly::constant(Q(1));
    for (const auto& f : den_factors) d *= f;
    return d;
  }
  // roots of the denominator (all factors are affine)
  std::set<Q> poles() const {
    std::set<Q> out;
    if (zero) return out;
    for (const auto& f : den_factors)
      if (f.degree() == 1) out.insert(-f[0] / f[1]);
    return out;
  }
};

// Singular hyperplane {lambda : lambda(e_j^vee) = value}: value 0 for D_j and
// -sign(i) for D_{|i|} + rho_{-i}.
struct PoleHyperplane {
  int index;
  int value;
  friend bool operator<(const PoleHyperplane& a, const PoleHyperplane& b) {
    return std::make_pair(a.index, a.value) < std::make_pair(b.index, b.value);
  }
  friend bool operator==(const PoleHyperplane& a, const PoleHyperplane& b) {
    return a.index == b.index && a.value == b.value;
  }
};
using PoleSet = std::set<PoleHyperplane>;

inline std::string set_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// upeta_I(lambda) = (-1)^{#I} c_{|I|} v_{|I|} prod_{i in I} lambda(e_i^vee)^{-1},
// identically zero when |I| meets I_eta.
inline SRationalFn upeta_factor(const EpsSubset& i, const SFunctional& lambda, const std::vector<int>& i_eta) {
  SRationalFn r;
  for (int e : i.elements())
    if (std::find(i_eta.begin(), i_eta.end(), std::abs(e)) != i_eta.end()) {
      r.zero = true;
      return r;
    }
  r.num = SPoly::constant(Q(i.size() % 2 ? -1 : 1));
  for (int e : i.elements()) {
    SPoly f = lambda.on(e);
    if (f.is_zero()) throw std::domain_error("upeta: lambda(e_" + std::to_string(e) + "^vee) vanishes identically");
    r.den_factors.push_back(f);
  }
  r.opaque = {"c_" + set_str(i.abs()), "v_" + set_str(i.abs())};
  return r;
}

inline bool disjoint(const EpsSubset& a, const EpsSubset& b) {
  for (int e : a.abs())
    if (b.meets_abs(e)) return false;
  return true;
}

// Bar Lambda^J_{J1,J2,J3}(lambda) = upeta_{J \ J12}(lambda + rho_{J3 \ J2}) Upsilon(lambda).
struct LambdaBar {
  EpsSubset j, j1, j2, j3;
  SRationalFn factor;
  std::string upsilon;
  bool vanishes() const { return factor.zero; }
};

inline void check_lambda_indices(const EpsSubset& j, const EpsSubset& j1, const EpsSubset& j2, const EpsSubset& j3) {
  if (!j1.subset_of(j) || !j3.subset_of(j) || !disjoint(j1, j3))
    throw std::invalid_argument("Lambda bar: need J1 and J3 disjoint inside J");
  if (!j2.subset_of(j3)) throw std::invalid_argument("Lambda bar: need J2 inside J3");
}

inline LambdaBar lambda_bar(const EpsSubset& j, const EpsSubset& j1, const EpsSubset& j2, const EpsSubset& j3,
                            const SFunctional& lambda, const std::vector<int>& i0, const std::vector<int>& i_eta) {
  check_lambda_indices(j, j1, j2, j3);
  const EpsSubset rest = j - (j1 | j2);
  LambdaBar lb{j, j1, j2, j3, upeta_factor(rest, lambda + rho_of(j3 - j2, i0), i_eta),
               "Upsilon_{" + j1.str() + "," + j2.str() + "," + j3.str() + "}"};
  return lb;
}

// two-index version: J3 = J \ J1
inline LambdaBar lambda_bar(const EpsSubset& j, const EpsSubset& j1, const EpsSubset& j2, const SFunctional& lambda,
                            const std::vector<int>& i0, const std::vector<int>& i_eta) {
  if (!disjoint(j1, j2)) throw std::invalid_argument("Lambda bar: J1 and J2 must be disjoint");
  return lambda_bar(j, j1, j2, j - j1, lambda, i0, i_eta);
}

// {D_i}_{i in |J \ J13|} u {D_{|i|} + rho_{-i}}_{i in J3 \ J2}
inline PoleSet lambda_bar_pole_set(const EpsSubset& j, const EpsSubset& j1, const EpsSubset& j2, const EpsSubset& j3) {
  check_lambda_indices(j, j1, j2, j3);
  PoleSet out;
  const EpsSubset free = j - (j1 | j3), shifted = j3 - j2;
  for (int i : free.elements()) out.insert({std::abs(i), 0});
  for (int i : shifted.elements()) out.insert({std::abs(i), i > 0 ? -1 : 1});
  return out;
}

inline PoleSet lambda_bar_pole_set(const EpsSubset& j, const EpsSubset& j1, const EpsSubset& j2) {
  if (!disjoint(j1, j2)) throw std::invalid_argument("Lambda bar: J1 and J2 must be disjoint");
  return lambda_bar_pole_set(j, j1, j2, j - j1);
}

// {D_i}_{i in |J|} u {D_{|i|} + rho_{-i}}_{i in J}
inline PoleSet zeta_pole_set(const EpsSubset& j) {
  PoleSet out;
  for (int i : j.elements()) {
    out.insert({std::abs(i), 0});
    out.insert({std::abs(i), i > 0 ? -1 : 1});
  }
  return out;
}

// Hyperplanes read off the upeta factor of a Bar Lambda: the factor for
// i in J \ J12 vanishes where lambda(e_{|i|}^vee) = -rho_{J3 \ J2}(e_{|i|}^vee).
inline PoleSet derived_pole_set(const LambdaBar& lb, const std::vector<int>& i0) {
  PoleSet out;
  if (lb.vanishes()) return out;
  const SFunctional shift = rho_of(lb.j3 - lb.j2, i0);
  const EpsSubset rest = lb.j - (lb.j1 | lb.j2);
  for (int i : rest.elements()) {
    Q v = -shift.on(std::abs(i))[0];
    out.insert({std::abs(i), static_cast<int>(v.get_num().get_si())});
  }
  return out;
}

// Restriction of a hyperplane to the line lambda = s det.
struct LineRestriction {
  bool contains_line = false;
  bool empty = false;
  Q s;
};

inline LineRestriction restrict_to_det(const PoleHyperplane& h, const std::vector<int>& i0) {
  SPoly f = s_det(i0).on(h.index) - SPoly::constant(Q(h.value));
  LineRestriction r;
  if (f.is_zero()) r.contains_line = true;
  else if (f.degree() == 0) r.empty = true;
  else r.s = -f[0] / f[1];
  return r;
}

// Every (J, J1, J2) with J1 u J2 a disjoint union inside J.
struct LambdaIndex {
  EpsSubset j, j1, j2;
};

inline std::vector<LambdaIndex> lambda_indices(const std::vector<int>& i0) {
  std::vector<LambdaIndex> out;
  for (const auto& j : enumerate_eps_subsets(i0)) {
    const auto& el = j.elements();
    std::size_t total = 1;
    for (std::size_t t = 0; t < el.size(); ++t) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> a, b;
      std::size_t c = code;
      for (int e : el) {
        if (c % 3 == 1) a.push_back(e);
        if (c % 3 == 2) b.push_back(e);
        c /= 3;
      }
      out.push_back({j, EpsSubset(a), EpsSubset(b)});
    }
  }
  return out;
}

inline std::vector<int> range_set(int m) {
  std::vector<int> v;
  for (int i = 1; i <= m; ++i) v.push_back(i);
  return v;
}

inline std::vector<std::vector<int>> all_subsets(const std::vector<int>& base) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << base.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask >> i & 1) s.push_back(base[i]);
    out.push_back(s);
  }
  return out;
}

inline bool meets(const std::vector<int>& abs_set, const std::vector<int>& i_eta) {
  for (int a : abs_set)
    if (std::find(i_eta.begin(), i_eta.end(), a) != i_eta.end()) return true;
  return false;
}

// Pole discipline on the line s det and the eta vanishing rules for every
// (J, J1, J2) over I0 and the given eta models.
inline CheckReport verify_pole_discipline(const std::vector<int>& i0, const std::vector<std::vector<int>>& eta_models) {
  CheckReport rep{"pole_discipline", "poles of Bar Lambda(s det) lie in {-1,1}; eta vanishing", 0, 0, 0, {}};
  const SFunctional line = s_det(i0);
  for (const auto& eta : eta_models)
    for (const auto& [j, j1, j2] : lambda_indices(i0)) {
      const std::string tag = "J=" + j.str() + " J1=" + j1.str() + " J2=" + j2.str() + " eta=" + set_str(eta);
      LambdaBar lb = lambda_bar(j, j1, j2, line, i0, eta);
      const EpsSubset rest = j - (j1 | j2);
      ++rep.cases;
      if (lb.vanishes() != meets(rest.abs(), eta)) rep.fail("vanishing rule " + tag);
      for (const Q& p : lb.factor.poles())
        if (p != 1 && p != -1) rep.fail("pole s=" + p.get_str() + " " + tag);
      PoleSet formula = lambda_bar_pole_set(j, j1, j2);
      for (const auto& h : formula) {
        auto r = restrict_to_det(h, i0);
        if (r.contains_line || r.empty || (r.s != 1 && r.s != -1)) rep.fail("restricted hyperplane " + tag);
      }
      if (!lb.vanishes() && derived_pole_set(lb, i0) != formula) rep.fail("pole set mismatch " + tag);
    }
  // zeta: the line s det lies in no singular hyperplane, and every Bar Lambda
  // of its expansion has its hyperplanes among those of zeta.
  for (const auto& j : enumerate_eps_subsets(i0)) {
    PoleSet zs = zeta_pole_set(j);
    ++rep.cases;
    for (const auto& h : zs) {
      auto r = restrict_to_det(h, i0);
      if (r.contains_line) rep.fail("line s det inside a zeta hyperplane J=" + j.str());
      if (!r.empty && r.s != 0 && r.s != 1 && r.s != -1) rep.fail("zeta restricted hyperplane off {-1,0,1} J=" + j.str());
    }
    for (const auto& [jj, a, b] : lambda_indices(i0)) {
      if (jj != j) continue;
      // J1 = a, J2 = b, J3 running over subsets of J \ J12; Bar Lambda_{J1,J2,J23}
      const EpsSubset rest = j - (a | b);
      for (const auto& sub : all_subsets(rest.elements())) {
        EpsSubset j3(sub);
        PoleSet ls = lambda_bar_pole_set(j, a, b, b | j3);
        ++rep.cases;
        for (const auto& h : ls)
          if (!zs.count(h)) rep.fail("Bar Lambda hyperplane outside zeta set J=" + j.str());
      }
    }
  }
  return rep;
}

// Formal symbols hat f^A(X_B) with per-index labels (A_i, B_i) in {-1,0,1}^2.
class FormalTermSum {
 public:
  using Key = std::vector<std::pair<int, int>>;

  void add(const Key& k, long c) {
    if (c == 0) return;
    auto& slot = t_[k];
    slot += c;
    if (slot == 0) t_.erase(k);
  }
  const std::map<Key, long>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  long total_weight() const {
    long s = 0;
    for (const auto& kv : t_) s += std::abs(kv.second);
    return s;
  }

  // Applies, index by index, the Poisson relation
  //   (e, -e) = (0, e) + (0, 0) - (e, 0),
  // which expresses a symbol whose Fourier and point labels are opposite at
  // an index through symbols without that pattern.
  FormalTermSum normalized() const {
    FormalTermSum cur = *this;
    for (;;) {
      FormalTermSum next;
      bool changed = false;
      for (const auto& [k, c] : cur.t_) {
        std::size_t pos = k.size();
        for (std::size_t i = 0; i < k.size(); ++i)
          if (k[i].first != 0 && k[i].second == -k[i].first) {
            pos = i;
            break;
          }
        if (pos == k.size()) {
          next.add(k, c);
          continue;
        }
        changed = true;
        const int e = k[pos].first;
        Key a = k, b = k, d = k;
        a[pos] = {0, e};
        b[pos] = {0, 0};
        d[pos] = {e, 0};
        next.add(a, c);
        next.add(b, c);
        next.add(d, -c);
      }
      cur = next;
      if (!changed) return cur;
    }
  }

  friend bool operator==(const FormalTermSum& a, const FormalTermSum& b) { return a.t_ == b.t_; }

  std::string str() const {
    std::string s;
    for (const auto& [k, c] : t_) {
      s += (c > 0 ? "+" : "") + std::to_string(c) + "*f[";
      for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i].first) + "|" + std::to_string(k[i].second);
      s += "] ";
    }
    return s;
  }

 private:
  std::map<Key, long> t_;
};

inline int label_of(const EpsSubset& s, int idx) { return s.sign_of(idx); }

// Left side: sum over |J| = I0 and J1 u J2 inside J of
//   (-1)^{#(J \ J12)} 1_{(J \ J2) u J2^sharp}(H) hat f^{J \ J1}(X_{J1 u J2^sharp}).
inline FormalTermSum signed_sum_lhs(const std::vector<int>& i0, const RhoPoint& h) {
  FormalTermSum out;
  for (const auto& [j, j1, j2] : lambda_indices(i0)) {
    if (j.size() != i0.size()) continue;
    const EpsSubset rest = j - (j1 | j2);
    const long sign = rest.size() % 2 ? -1 : 1;
    const int ind = indicator_1((j - j2) | j2.sharp(), h);
    if (!ind) continue;
    const EpsSubset fourier = j - j1, point = j1 | j2.sharp();
    FormalTermSum::Key key;
    for (int i : i0) key.push_back({label_of(fourier, i), label_of(point, i)});
    out.add(key, sign);
  }
  return out;
}

// Right side: sum over I u J inside I0 (eps) of (-1)^{#J} hat f^J(X_I).
inline FormalTermSum signed_sum_rhs(const std::vector<int>& i0) {
  FormalTermSum out;
  std::size_t total = 1;
  for (std::size_t t = 0; t < i0.size(); ++t) total *= 5;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> ie, je;
    std::size_t c = code;
    for (int i : i0) {
      switch (c % 5) {
        case 1: ie.push_back(i); break;
        case 2: ie.push_back(-i); break;
        case 3: je.push_back(i); break;
        case 4: je.push_back(-i); break;
        default: break;
      }
      c /= 5;
    }
    EpsSubset is(ie), js(je);
    FormalTermSum::Key key;
    for (int i : i0) key.push_back({label_of(js, i), label_of(is, i)});
    out.add(key, js.size() % 2 ? -1 : 1);
  }
  return out;
}

inline CheckReport verify_signed_sum_identity(const std::vector<int>& i0, long samples, std::uint64_t seed) {
  CheckReport rep{"signed_sum_identity", "pointwise inclusion-exclusion behind Bar Lambda expansion of I_o", 0, 0, 0, {}};
  Rng rng(seed);
  const FormalTermSum rhs = signed_sum_rhs(i0).normalized();
  for (long t = 0; t < samples; ++t) {
    RhoPoint h;
    for (int i : i0) h[i] = (t % 10 == 9 && i == i0.front()) ? Q(0) : random_q(rng, 100, 5);
    FormalTermSum lhs = signed_sum_lhs(i0, h).normalized();
    ++rep.cases;
    if (!(lhs == rhs)) {
      std::string hs;
      for (const auto& [k, v] : h) hs += std::to_string(k) + ":" + v.get_str() + " ";
      rep.fail("I0=" + set_str(i0) + " H=" + hs + " lhs=" + lhs.str() + " rhs=" + rhs.str());
    }
  }
  return rep;
}

// mu_J = (-1)^{#J} for every eps-subset J of I0 = {1..m}.
inline CheckReport verify_mu(int max_i0) {
  CheckReport rep{"mu_J", "signed count of parabolics with I_Q = J", 0, 0, 0, {}};
  for (int m = 0; m <= max_i0; ++m) {
    auto i0 = range_set(m);
    for (const auto& j : enumerate_eps_subsets(i0)) {
      ++rep.cases;
      if (mu(j, i0) != (j.size() % 2 ? -1 : 1)) rep.fail("I0=" + set_str(i0) + " J=" + j.str());
    }
  }
  return rep;
}

// sum_i (-1)^i a_i^m = (-1)^m
inline CheckReport verify_alternating_chains(int max_m) {
  CheckReport rep{"alternating_chains", "alternating sum of chain counts a_i^m", 0, 0, 0, {}};
  for (int m = 0; m <= max_m; ++m) {
    mpz_class acc = 0;
    for (int i = 0; i <= m; ++i) acc += (i % 2 ? -1 : 1) * ordered_partition_count(i, m);
    ++rep.cases;
    if (acc != (m % 2 ? -1 : 1)) rep.fail("m=" + std::to_string(m));
  }
  return rep;
}

}  // namespace jr
