#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbit_census.hpp"
#include "parabolics.hpp"
#include "report.hpp"

namespace jr::io {

using json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" (or integers).
inline json to_json(const Q& x) { return x.get_str(); }

inline Q q_from_json(const json& j) {
  if (j.is_string()) return parse_q(j.get<std::string>());
  if (j.is_number_integer()) return Q(j.get<long>());
  throw std::invalid_argument("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

inline json to_json(const Vec<Q>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vec<Q> vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  Vec<Q> v;
  for (const auto& x : j) v.push_back(q_from_json(x));
  return v;
}

inline json to_json(const Matrix<Q>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Matrix<Q> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Q>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Matrix<Q>::from_rows(rows);
}

// coefficient arrays, constant term first
inline json to_json(const Poly<Q>& p) {
  json a = json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(to_json(p[k]));
  return a;
}

inline Poly<Q> poly_from_json(const json& j) {
  if (j.is_array()) return Poly<Q>(vec_from_json(j));
  return Poly<Q>::constant(q_from_json(j));
}

// affine function of s as {const, s}
inline json affine_json(const SPoly& p) {
  return json{{"const", to_json(p[0])}, {"s", to_json(p.degree() >= 1 ? p[1] : Q(0))}};
}

inline json to_json(const ClassInvariants<Q>& c) { return json{{"A", to_json(c.A)}, {"B", to_json(c.Bc)}}; }

inline json to_json(const JRElement<Q>& x) { return to_json(compose(x)); }

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

// {"n", "B", "factors", "alpha", "d"}; each alpha entry is a rational or a
// coefficient array reduced modulo its factor.
inline ClassDescriptor class_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("class descriptor must be an object");
  for (const char* key : {"B", "factors", "alpha"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("class descriptor lacks \"") + key + "\"");
  ClassDescriptor c;
  c.B = matrix_from_json(j.at("B"));
  if (!c.B.square()) throw std::invalid_argument("B must be square");
  if (j.contains("n") && j.at("n").get<std::size_t>() != c.B.rows()) throw std::invalid_argument("n disagrees with the size of B");
  for (const auto& f : j.at("factors")) c.factors.push_back(poly_from_json(f));
  for (const auto& a : j.at("alpha")) c.alpha.push_back(poly_from_json(a));
  c.d = j.contains("d") ? q_from_json(j.at("d")) : Q(0);
  return c;
}

inline json to_json(const ClassDescriptor& c) {
  json f = json::array(), a = json::array();
  for (const auto& p : c.factors) f.push_back(to_json(p));
  for (const auto& p : c.alpha) a.push_back(to_json(p));
  return json{{"n", c.n()}, {"B", to_json(c.B)}, {"factors", f}, {"alpha", a}, {"d", to_json(c.d)}};
}

inline json to_json(const CheckReport& r) {
  return json{{"identity", r.identity}, {"reference", r.reference}, {"pass", r.pass()},          {"cases", r.cases},
              {"degenerate", r.degenerate}, {"failure_count", r.failure_count}, {"failures", r.failures}};
}

inline json to_json(const RelStdParabolic& q) {
  json dh = json::array();
  for (const auto& w : delta_hat(q)) dh.push_back(to_json(w));
  const auto rho = rho_Q_s(q);
  return json{{"indices", q.idx},
              {"k", q.k},
              {"d", q.d()},
              {"delta_hat", dh},
              {"s_Q", affine_json(s_sub(q))},
              {"rho_Q_s", json{{"const", to_json(rho.c)}, {"s", to_json(rho.s)}}}};
}

inline json to_json(const CensusReport& r) {
  json orbits_by_class = json::object();
  for (const auto& [fp, rows] : r.class_table) {
    json a = json::array();
    for (const auto& [size, stab] : rows) a.push_back(json{{"orbit_size", size}, {"stabilizer_order", stab}});
    orbits_by_class[fp] = a;
  }
  json out{{"n", r.n},
           {"p", r.p},
           {"mode", r.sampled ? "sampled" : "exhaustive"},
           {"elements", r.elements},
           {"regular_semisimple", r.regular_semisimple},
           {"orbit_count", r.orbit_count},
           {"class_count", r.class_table.size()},
           {"violation_count", r.violation_count},
           {"violations", r.violations}};
  if (r.sampled) out["seed"] = r.seed;
  return out;
}

inline json to_json(const ClassCensus& c) {
  json orbits = json::array();
  for (const auto& o : c.orbits)
    orbits.push_back(json{{"representative", o.eps}, {"orbit_size", o.size}, {"stabilizer_order", o.stabilizer}});
  return json{{"p", c.p},       {"I0", c.I0},         {"expected_orbits", c.expected}, {"orbit_count", c.orbit_count()},
              {"fiber_size", c.fiber_size}, {"orbits", orbits}, {"pass", c.pass()},        {"violations", c.violations}};
}

}  // namespace jr::io
