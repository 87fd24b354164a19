#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace jr {

// Coordinates of a_0~ are indexed 0..n, coordinate 0 being the D_0 line.
using Weight = Vec<Q>;

// mu = c + s * s_part, a weight depending affinely on the formal variable s.
struct AffineWeight {
  Weight c;
  Weight s;
  friend bool operator==(const AffineWeight& a, const AffineWeight& b) { return a.c == b.c && a.s == b.s; }
};

// An affine function a + b s, stored as a polynomial in s.
using SPoly = Poly<Q>;

inline SPoly s_affine(const Q& a, const Q& b) { return SPoly({a, b}); }

inline Weight zero_weight(int n) { return Weight(static_cast<std::size_t>(n + 1), Q(0)); }

inline Q pair(const Weight& w, const Vec<Q>& x) {
  if (w.size() != x.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Q acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
  return acc;
}

inline SPoly pair(const AffineWeight& w, const Vec<Q>& x) { return s_affine(pair(w.c, x), pair(w.s, x)); }

// Flag V_{i_0} (+) D_0 ... encoded by 0 = i_0 <= ... <= i_l = n and the
// insertion position k of D_0.
struct RelStdParabolic {
  int n = 0;
  std::vector<int> idx;
  int k = 1;

  int l() const { return static_cast<int>(idx.size()) - 1; }
  // dim a_Q^G~
  int d() const { return l() - 1; }
  bool is_full() const { return l() == 1; }

  // Blocks of M_Q~: block j (1-based) is {i_{j-1}+1..i_j}, plus 0 when j = k.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> b;
    for (int j = 1; j <= l(); ++j) {
      std::vector<int> blk;
      if (j == k) blk.push_back(0);
      for (int x = idx[j - 1] + 1; x <= idx[j]; ++x) blk.push_back(x);
      b.push_back(blk);
    }
    return b;
  }
  // Blocks of M_Q = M_Q~ cap G; block k may be empty.
  std::vector<std::vector<int>> g_blocks() const {
    auto b = blocks();
    auto& bk = b[static_cast<std::size_t>(k - 1)];
    bk.erase(bk.begin());
    return b;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("parabolic: n must be positive");
    if (idx.size() < 2 || idx.front() != 0 || idx.back() != n)
      throw std::invalid_argument("parabolic: indices must run from 0 to n");
    if (k < 1 || k > l()) throw std::invalid_argument("parabolic: k out of range");
    for (int j = 1; j <= l(); ++j) {
      if (idx[j] < idx[j - 1]) throw std::invalid_argument("parabolic: indices must be nondecreasing");
      if (idx[j] == idx[j - 1] && j != k) throw std::invalid_argument("parabolic: repeated index away from k");
    }
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ";" + std::to_string(k) + ")";
  }

  friend bool operator==(const RelStdParabolic& a, const RelStdParabolic& b) {
    return a.n == b.n && a.idx == b.idx && a.k == b.k;
  }
  friend bool operator<(const RelStdParabolic& a, const RelStdParabolic& b) {
    if (a.l() != b.l()) return a.l() < b.l();
    if (a.idx != b.idx) return a.idx < b.idx;
    return a.k < b.k;
  }
};

inline RelStdParabolic make_parabolic(int n, std::vector<int> idx, int k) {
  RelStdParabolic p{n, std::move(idx), k};
  p.validate();
  return p;
}

inline RelStdParabolic full_parabolic(int n) { return make_parabolic(n, {0, n}, 1); }

namespace detail {
inline void gen_flags(int n, std::vector<int>& cur, bool repeated, std::vector<RelStdParabolic>& out) {
  const int last = cur.back();
  if (last == n && cur.size() >= 2) {
    const int l = static_cast<int>(cur.size()) - 1;
    int rep = 0;
    for (int j = 1; j <= l; ++j)
      if (cur[j] == cur[j - 1]) rep = j;
    if (rep) out.push_back({n, cur, rep});
    else
      for (int k = 1; k <= l; ++k) out.push_back({n, cur, k});
  }
  for (int next = last; next <= n; ++next) {
    const bool rep = next == last;
    if (rep && repeated) continue;
    cur.push_back(next);
    gen_flags(n, cur, repeated || rep, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Every relatively standard parabolic of GL_{n+1}, ordered lexicographically
// on (l, indices, k).
inline std::vector<RelStdParabolic> enumerate_rel_std(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_rel_std: n must be positive");
  std::vector<RelStdParabolic> out;
  std::vector<int> cur{0};
  detail::gen_flags(n, cur, false, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// P contains Q: every block of P is a union of consecutive blocks of Q.
inline bool contains(const RelStdParabolic& p, const RelStdParabolic& q) {
  if (p.n != q.n) throw std::invalid_argument("contains: rank mismatch");
  auto pb = p.blocks(), qb = q.blocks();
  std::vector<int> owner(static_cast<std::size_t>(p.n + 1));
  for (std::size_t j = 0; j < pb.size(); ++j)
    for (int x : pb[j]) owner[static_cast<std::size_t>(x)] = static_cast<int>(j);
  int prev = 0;
  for (const auto& blk : qb) {
    if (blk.empty()) throw std::logic_error("contains: empty block of M_Q~");
    int o = owner[static_cast<std::size_t>(blk[0])];
    for (int x : blk)
      if (owner[static_cast<std::size_t>(x)] != o) return false;
    if (o < prev) return false;
    prev = o;
  }
  return true;
}

inline Weight indicator(int n, const std::vector<int>& block) {
  Weight w = zero_weight(n);
  for (int x : block) w[static_cast<std::size_t>(x)] = 1;
  return w;
}

// Orthogonal projection onto a_P: average over each block of P.
inline Vec<Q> project(const RelStdParabolic& p, const Vec<Q>& h) {
  Vec<Q> out(h.size());
  for (const auto& blk : p.blocks()) {
    Q avg = 0;
    for (int x : blk) avg += h[static_cast<std::size_t>(x)];
    avg /= static_cast<long>(blk.size());
    for (int x : blk) out[static_cast<std::size_t>(x)] = avg;
  }
  return out;
}

struct RootData {
  std::vector<Weight> roots;     // Delta_P^Q, one per adjacent block pair merged in Q
  std::vector<Weight> coweights; // hat Delta_P^Q, dual to the coroots
};

// Delta_P^Q and hat Delta_P^Q for P contained in Q. Roots and coroots are
// identified through the standard form, so coroot vectors equal root vectors
// and coweight vectors equal weight vectors.
inline RootData root_data(const RelStdParabolic& p, const RelStdParabolic& q) {
  if (!contains(q, p)) throw std::invalid_argument("root_data: " + p.str() + " is not contained in " + q.str());
  const int n = p.n;
  auto pb = p.blocks(), qb = q.blocks();
  std::vector<int> owner(static_cast<std::size_t>(n + 1));
  for (std::size_t j = 0; j < qb.size(); ++j)
    for (int x : qb[j]) owner[static_cast<std::size_t>(x)] = static_cast<int>(j);
  RootData rd;
  std::size_t j0 = 0;
  while (j0 < pb.size()) {
    std::size_t j1 = j0;
    const int o = owner[static_cast<std::size_t>(pb[j0][0])];
    while (j1 + 1 < pb.size() && owner[static_cast<std::size_t>(pb[j1 + 1][0])] == o) ++j1;
    long total = 0;
    for (std::size_t j = j0; j <= j1; ++j) total += static_cast<long>(pb[j].size());
    long partial = 0;
    for (std::size_t j = j0; j < j1; ++j) {
      Weight a = zero_weight(n);
      for (int x : pb[j]) a[static_cast<std::size_t>(x)] = frac(1, static_cast<long>(pb[j].size()));
      for (int x : pb[j + 1]) a[static_cast<std::size_t>(x)] = frac(-1, static_cast<long>(pb[j + 1].size()));
      rd.roots.push_back(a);
      partial += static_cast<long>(pb[j].size());
      Weight w = zero_weight(n);
      for (std::size_t i = j0; i <= j1; ++i)
        for (int x : pb[i]) w[static_cast<std::size_t>(x)] = (i <= j ? Q(1) : Q(0)) - frac(partial, total);
      rd.coweights.push_back(w);
    }
    j0 = j1 + 1;
  }
  return rd;
}

// varpi~_i^- and varpi~_i^+; zero for i outside 1..n.
inline Weight varpi_minus(int i, int n) {
  Weight w = zero_weight(n);
  if (i < 1 || i > n) return w;
  for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = (j >= 1 && j <= i) ? frac(n + 1 - i, n + 1) : frac(-i, n + 1);
  return w;
}

inline Weight varpi_plus(int i, int n) {
  Weight w = zero_weight(n);
  if (i < 1 || i > n) return w;
  for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = (j < i) ? frac(n + 1 - i, n + 1) : frac(-i, n + 1);
  return w;
}

// hat Delta_Q~ = {varpi~^-_{i_a} : 1 <= a <= k-1} u {varpi~^+_{i_b+1} : k <= b <= l-1}.
inline std::vector<Weight> delta_hat(const RelStdParabolic& q) {
  std::vector<Weight> out;
  for (int a = 1; a <= q.k - 1; ++a) out.push_back(varpi_minus(q.idx[a], q.n));
  for (int b = q.k; b <= q.l() - 1; ++b) out.push_back(varpi_plus(q.idx[b] + 1, q.n));
  return out;
}

// s_Q = (s(n+1) + i_{k-1} + i_k - n) / (i_k - i_{k-1} + 1)
inline SPoly s_sub(const RelStdParabolic& q) {
  const int lo = q.idx[q.k - 1], hi = q.idx[q.k];
  const Q m(hi - lo + 1);
  return s_affine(Q(lo + hi - q.n) / m, Q(q.n + 1) / m);
}

inline Weight varpi_Q_minus(const RelStdParabolic& q) { return varpi_minus(q.idx[q.k - 1], q.n); }
inline Weight varpi_Q_plus(const RelStdParabolic& q) { return varpi_plus(q.idx[q.k] + 1, q.n); }

// rho_{Q,s} = (1 + s_Q) varpi~_Q^- + (1 - s_Q) varpi~_Q^+
inline AffineWeight rho_Q_s(const RelStdParabolic& q) {
  const SPoly sq = s_sub(q);
  const Q a = sq[0], b = sq[1];
  const Weight wm = varpi_Q_minus(q), wp = varpi_Q_plus(q);
  AffineWeight r{zero_weight(q.n), zero_weight(q.n)};
  for (std::size_t i = 0; i < wm.size(); ++i) {
    r.c[i] = (1 + a) * wm[i] + (1 - a) * wp[i];
    r.s[i] = b * wm[i] - b * wp[i];
  }
  return r;
}

struct ThetaHat {
  SPoly product;  // prod over hat Delta^vee of mu(varpi^vee)
  Q v_sq;         // v_Q^2, Gram determinant of hat Delta^vee
};

inline Q gram_det(const std::vector<Weight>& vs) {
  const std::size_t m = vs.size();
  if (m == 0) return Q(1);
  Matrix<Q> g(m, m, Q(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = pair(vs[i], vs[j]);
  return det(g);
}

inline ThetaHat theta_hat(const RelStdParabolic& q, const AffineWeight& mu) {
  auto dh = delta_hat(q);
  SPoly prod = SPoly::constant(Q(1));
  for (const auto& w : dh) prod *= pair(mu, w);
  return {prod, gram_det(dh)};
}

inline ThetaHat theta_hat(const RelStdParabolic& q, const Weight& mu) {
  return theta_hat(q, AffineWeight{mu, zero_weight(q.n)});
}

// Basis {1_{b_j} : j != k} of a^st_Q.
inline std::vector<Weight> a_st_basis(const RelStdParabolic& q) {
  std::vector<Weight> out;
  auto b = q.blocks();
  for (int j = 1; j <= q.l(); ++j)
    if (j != q.k) out.push_back(indicator(q.n, b[static_cast<std::size_t>(j - 1)]));
  return out;
}

inline Vec<Q> center(const Vec<Q>& h) {
  Q avg = 0;
  for (const auto& x : h) avg += x;
  avg /= static_cast<long>(h.size());
  Vec<Q> out = h;
  for (auto& x : out) x -= avg;
  return out;
}

// j_Q^2: Gram determinant of the image of the a^st basis in a^G~ divided by
// the Gram determinant of the basis itself.
inline Q jacobian_sq(const RelStdParabolic& q) {
  auto basis = a_st_basis(q);
  std::vector<Weight> proj;
  for (const auto& b : basis) proj.push_back(center(b));
  return gram_det(proj) / gram_det(basis);
}

// 2 rho on a block-constant subspace: coefficient (#later - #earlier).
inline Weight two_rho(int n, const std::vector<std::vector<int>>& blocks) {
  Weight w = zero_weight(n);
  long before = 0, total = 0;
  for (const auto& b : blocks) total += static_cast<long>(b.size());
  for (const auto& b : blocks) {
    long after = total - before - static_cast<long>(b.size());
    for (int x : b) w[static_cast<std::size_t>(x)] = Q(after - before);
    before += static_cast<long>(b.size());
  }
  return w;
}

inline Weight det_weight(int n) {
  Weight w = zero_weight(n);
  for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j)] = 1;
  return w;
}

// Values of mu on 1_b for the blocks b of P, as affine functions of s.
inline std::vector<SPoly> block_values(const AffineWeight& mu, const RelStdParabolic& p) {
  std::vector<SPoly> out;
  for (const auto& b : p.blocks()) out.push_back(pair(mu, indicator(p.n, b)));
  return out;
}

// Transport of lambda in a_Q^* to (a_Q~^G~)^*: block-constant, equal to
// lambda(1_{b_j})/m_j on every block j != k, and fixed on block k by the
// requirement that the total vanishes.
inline AffineWeight iota_st(const RelStdParabolic& q, const AffineWeight& lambda) {
  auto b = q.blocks();
  AffineWeight r{zero_weight(q.n), zero_weight(q.n)};
  Q rest_c = 0, rest_s = 0;
  for (int j = 1; j <= q.l(); ++j) {
    if (j == q.k) continue;
    const auto& blk = b[static_cast<std::size_t>(j - 1)];
    Weight ind = indicator(q.n, blk);
    Q vc = pair(lambda.c, ind), vs = pair(lambda.s, ind);
    rest_c += vc;
    rest_s += vs;
    for (int x : blk) {
      r.c[static_cast<std::size_t>(x)] = vc / static_cast<long>(blk.size());
      r.s[static_cast<std::size_t>(x)] = vs / static_cast<long>(blk.size());
    }
  }
  const auto& bk = b[static_cast<std::size_t>(q.k - 1)];
  for (int x : bk) {
    r.c[static_cast<std::size_t>(x)] = -rest_c / static_cast<long>(bk.size());
    r.s[static_cast<std::size_t>(x)] = -rest_s / static_cast<long>(bk.size());
  }
  return r;
}

// rho_{Q,s} = iota^st(s det - 2 rho_Q) + 2 rho_Q~, compared on a_Q~.
inline bool lemma_item1(const RelStdParabolic& q) {
  AffineWeight lam{zero_weight(q.n), det_weight(q.n)};
  Weight tr = two_rho(q.n, q.g_blocks());
  for (std::size_t i = 0; i < lam.c.size(); ++i) lam.c[i] = -tr[i];
  AffineWeight rhs = iota_st(q, lam);
  Weight t2 = two_rho(q.n, q.blocks());
  for (std::size_t i = 0; i < t2.size(); ++i) rhs.c[i] += t2[i];
  return block_values(rho_Q_s(q), q) == block_values(rhs, q);
}

// On the D_0-block of Q~ (size m_k, counting coordinate 0):
// (s - s_Q) m_k = rho_{Q,s}(1_{b_k}).
inline bool lemma_item2(const RelStdParabolic& q) {
  const auto bk = q.blocks()[static_cast<std::size_t>(q.k - 1)];
  SPoly lhs = SPoly::constant(Q(static_cast<long>(bk.size()))) * (SPoly::x(Q(0)) - s_sub(q));
  return lhs == pair(rho_Q_s(q), indicator(q.n, bk));
}

// rho_{Q,s} and rho_{R,s} agree on a_R~ for R containing Q.
inline bool restriction_check(const RelStdParabolic& q, const RelStdParabolic& r) {
  if (!contains(r, q)) throw std::invalid_argument("restriction_check: " + r.str() + " does not contain " + q.str());
  return block_values(rho_Q_s(q), r) == block_values(rho_Q_s(r), r);
}

// rho_{Q,s} restricted to a_R~^G~ is nonzero at the given s.
inline bool restriction_nonzero(const RelStdParabolic& q, const RelStdParabolic& r, const Q& s) {
  auto vals = block_values(rho_Q_s(q), r);
  auto blocks = r.blocks();
  std::set<Q> avgs;
  for (std::size_t j = 0; j < vals.size(); ++j) avgs.insert(vals[j].eval(s) / static_cast<long>(blocks[j].size()));
  return avgs.size() > 1;
}

// rho_{Q,s}(varpi~^vee) against i_a (1 + s) and (n - i_b)(1 - s) on hat Delta_Q~.
inline bool exponent_closed_forms(const RelStdParabolic& q) {
  const AffineWeight rho = rho_Q_s(q);
  for (int a = 1; a <= q.k - 1; ++a)
    if (pair(rho, varpi_minus(q.idx[a], q.n)) != SPoly::constant(Q(q.idx[a])) * s_affine(Q(1), Q(1))) return false;
  for (int b = q.k; b <= q.l() - 1; ++b)
    if (pair(rho, varpi_plus(q.idx[b] + 1, q.n)) != SPoly::constant(Q(q.n - q.idx[b])) * s_affine(Q(1), Q(-1))) return false;
  return true;
}

// Roots of theta_hat(rho_{Q,s}) lie in {-1, 1}.
inline bool theta_roots_ok(const RelStdParabolic& q) {
  const auto th = theta_hat(q, rho_Q_s(q));
  if (th.product.is_zero()) return false;
  SPoly rest = th.product;
  for (int sign : {1, -1}) {
    SPoly lin = s_affine(Q(sign), Q(1));  // s + sign
    while (rest.degree() > 0 && sgn(rest.eval(Q(-sign))) == 0) rest = divmod(rest, lin).first;
  }
  return rest.degree() == 0;
}

// Independent count: ordered set partitions of {0..n} (block of each
// coordinate) whose parabolic contains the upper triangular Borel of GL_n,
// i.e. block(i) <= block(j) whenever 1 <= i < j <= n.
inline long count_rel_std_bruteforce(int n) {
  const int m = n + 1;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  long total = 0;
  for (;;) {
    int nb = *std::max_element(f.begin(), f.end()) + 1;
    std::vector<bool> hit(static_cast<std::size_t>(nb), false);
    for (int v : f) hit[static_cast<std::size_t>(v)] = true;
    bool ok = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
    for (int i = 1; ok && i < n; ++i) ok = f[static_cast<std::size_t>(i)] <= f[static_cast<std::size_t>(i + 1)];
    total += ok;
    int i = 0;
    while (i < m && ++f[static_cast<std::size_t>(i)] == m) f[static_cast<std::size_t>(i++)] = 0;
    if (i == m) break;
  }
  return total;
}

inline CheckReport verify_parabolics(int max_n, const std::vector<Q>& s_samples) {
  CheckReport rep{"parabolics", "exponent lemmas for rho_{Q,s}, theta_hat roots, restriction to R~", 0, 0, 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    auto ps = enumerate_rel_std(n);
    ++rep.cases;
    if (static_cast<long>(ps.size()) != count_rel_std_bruteforce(n))
      rep.fail("n=" + std::to_string(n) + ": " + std::to_string(ps.size()) + " parabolics");
    for (const auto& q : ps) {
      rep.cases += 4;
      if (!exponent_closed_forms(q)) rep.fail("closed forms " + q.str());
      if (!theta_roots_ok(q)) rep.fail("theta_hat roots " + q.str());
      if (!lemma_item1(q)) rep.fail("item 1 " + q.str());
      if (!lemma_item2(q)) rep.fail("item 2 " + q.str());
      for (const auto& r : ps) {
        if (!contains(r, q)) continue;
        ++rep.cases;
        if (!restriction_check(q, r)) rep.fail("item 3 " + q.str() + " in " + r.str());
        if (r.is_full()) continue;
        for (const Q& s : s_samples) {
          if (s == 1 || s == -1) continue;
          ++rep.cases;
          if (!restriction_nonzero(q, r, s)) rep.fail("zero restriction " + q.str() + " to " + r.str() + " at s=" + s.get_str());
        }
      }
    }
  }
  return rep;
}

}  // namespace jr
