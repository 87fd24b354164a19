// jrtool: command-line front end for the jr library.
// Exit status: 0 all checks pass, 1 a mathematical violation was found,
// 2 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jr/cones.hpp"
#include "jr/invariants.hpp"
#include "jr/json_io.hpp"
#include "jr/orbit_census.hpp"
#include "jr/parabolics.hpp"
#include "jr/polyexp.hpp"
#include "jr/rrss.hpp"

using jr::Q;
using json = jr::io::json;

namespace {

struct Common {
  std::string format = "json";
  std::string output;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw std::invalid_argument("cannot write " + c.output);
  out << text;
}

std::string csv_of(const std::vector<jr::CheckReport>& reps) {
  std::string s = "identity,reference,cases,degenerate,failures,pass\n";
  for (const auto& r : reps)
    s += r.identity + ",\"" + r.reference + "\"," + std::to_string(r.cases) + "," + std::to_string(r.degenerate) + "," +
         std::to_string(r.failure_count) + "," + (r.pass() ? "true" : "false") + "\n";
  return s;
}

int finish_checks(const Common& c, json config, std::vector<jr::CheckReport> reps) {
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.identity < b.identity; });
  bool ok = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.pass(); });
  if (c.format == "csv") {
    emit(c, csv_of(reps));
  } else {
    json checks = json::array();
    for (const auto& r : reps) checks.push_back(jr::io::to_json(r));
    emit(c, json{{"config", config}, {"pass", ok}, {"checks", checks}}.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& t : split(s, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + s);
    }
  }
  return out;
}

jr::Vec<Q> parse_point(const std::string& s) {
  jr::Vec<Q> v;
  for (const auto& t : split(s, ',')) v.push_back(jr::parse_q(t));
  return v;
}

// "0,1,2;2", "(0,1,2;2)" or "0,1,2:2"
jr::RelStdParabolic parse_parabolic(int n, std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }), s.end());
  std::replace(s.begin(), s.end(), ':', ';');
  auto parts = split(s, ';');
  if (parts.size() != 2) throw std::invalid_argument("parabolic must look like \"0,1,2;2\" (indices;k)");
  auto k = parse_int_list(parts[1]);
  if (k.size() != 1) throw std::invalid_argument("parabolic: k must be a single integer");
  return jr::make_parabolic(n, parse_int_list(parts[0]), k[0]);
}

void require_n(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(what) + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<jr::CheckReport> cone_suite(int n, long samples, std::uint64_t seed, jr::GammaSign conv) {
  require_n(n, 1, 5, "verify cones");
  return {jr::verify_basic_identity(n), jr::verify_langlands(n, samples, seed), jr::verify_sigma(n, samples, seed),
          jr::verify_gamma_recurrence(n, samples, seed, conv), jr::verify_gamma_support(n, samples, seed)};
}

std::vector<jr::CheckReport> parabolic_suite(int n) {
  require_n(n, 1, 6, "verify parabolics");
  return {jr::verify_parabolics(n, {Q(0), jr::frac(1, 2), jr::frac(-1, 3), Q(2), jr::frac(-7, 5)})};
}

std::vector<jr::CheckReport> rrss_suite(int i0_size, const std::vector<int>& eta, long samples, std::uint64_t seed) {
  if (i0_size < 0 || i0_size > 4) throw std::invalid_argument("rrss: #I0 must lie in [0, 4]");
  auto i0 = jr::range_set(i0_size);
  for (int e : eta)
    if (e < 1 || e > i0_size) throw std::invalid_argument("rrss: eta index " + std::to_string(e) + " is not in I0");
  std::vector<std::vector<int>> models{{}, i0};
  std::vector<int> sorted_eta = eta;
  std::sort(sorted_eta.begin(), sorted_eta.end());
  sorted_eta.erase(std::unique(sorted_eta.begin(), sorted_eta.end()), sorted_eta.end());
  if (sorted_eta != i0 && !sorted_eta.empty()) models.push_back(sorted_eta);
  return {jr::verify_mu(i0_size), jr::verify_alternating_chains(8), jr::verify_pole_discipline(i0, models),
          jr::verify_signed_sum_identity(i0, samples, seed)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, parabolics, cone identities, orbit census and rrss bookkeeping for GL(n) in GL(n+1)"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", common.output, "write the report to this file instead of stdout");

  // invariants
  std::string matrix_path;
  auto* inv = app.add_subcommand("invariants", "class invariants A_i, B_j of an (n+1)x(n+1) matrix");
  inv->add_option("--matrix", matrix_path, "JSON file: array of rows, or {\"matrix\": rows}")->required();

  // classify
  std::string class_path;
  std::vector<unsigned> primes;
  auto* cls = app.add_subcommand("classify", "orbit representatives X_I of a relatively regular semisimple class");
  cls->add_option("--class", class_path, "JSON class descriptor {n, B, factors, alpha, d}")->required();
  cls->add_option("--p", primes, "primes for the finite-field orbit census of the reduced class");

  // parabolics
  int par_n = 2;
  bool list = false;
  auto* par = app.add_subcommand("parabolics", "relatively standard parabolic subgroups");
  par->add_option("--n", par_n, "rank n of GL(n)")->required();
  par->add_flag("--list", list, "list every parabolic with its exponents");

  // verify
  int ver_n = 3, i0_size = 3;
  long samples = 1000, rrss_samples = 100;
  std::uint64_t seed = 7;
  std::string suite_name, gamma_sign = "arthur";
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("suite", suite_name, "cones, parabolics, rrss or all")->check(CLI::IsMember({"cones", "parabolics", "rrss", "all"}))->required();
  ver->add_option("--n", ver_n, "rank n");
  ver->add_option("--samples", samples, "random samples per identity");
  ver->add_option("--seed", seed, "seed of the sampler");
  std::string eta_list;
  ver->add_option("--I0", i0_size, "size of I0 for the rrss suite");
  ver->add_option("--eta", eta_list, "comma separated I_eta for the rrss suite");
  ver->add_option("--gamma-sign", gamma_sign, "sign convention for Gamma'")->check(CLI::IsMember({"arthur", "as_written"}));

  // rrss verify (alias)
  auto* rr = app.add_subcommand("rrss", "rrss rational-function bookkeeping");
  auto* rrv = rr->add_subcommand("verify", "pole discipline, eta vanishing, mu_J and the signed-sum identity");
  rr->require_subcommand(1);
  rrv->add_option("--I0", i0_size, "size of I0")->required();
  rrv->add_option("--eta", eta_list, "comma separated I_eta");
  rrv->add_option("--samples", rrss_samples, "sampled points H");
  rrv->add_option("--seed", seed, "seed");

  // census
  int cen_n = 2;
  unsigned cen_p = 3;
  std::uint64_t cen_samples = 0;
  std::string summary_path;
  auto* cen = app.add_subcommand("census", "orbit census of GL_n(F_p) on gl_{n+1}(F_p)");
  cen->add_option("--n", cen_n, "rank n")->required();
  cen->add_option("--p", cen_p, "prime p")->required();
  cen->add_option("--sample", cen_samples, "sampled separation check with this many pairs");
  cen->add_option("--seed", seed, "seed of the sampler");
  cen->add_option("--summary", summary_path, "also write the JSON summary to this file");

  // pexp
  int pe_n = 2;
  std::string pe_par, pe_s = "0", pe_x;
  double tol = 1e-11;
  auto* pe = app.add_subcommand("pexp", "p_{Q,s}(X): constant term, exponents and a quadrature check");
  pe->add_option("--n", pe_n, "rank n")->required();
  pe->add_option("--parabolic", pe_par, "indices;k, e.g. 0,1,2;2")->required();
  pe->add_option("--s", pe_s, "rational s");
  pe->add_option("--X", pe_x, "comma separated point in a_0 (n+1 rationals)")->required();
  pe->add_option("--tol", tol, "quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inv) {
      json j = jr::io::read_file(matrix_path);
      if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
      auto m = jr::io::matrix_from_json(j);
      auto x = jr::decompose(m);
      json out{{"config", {{"command", "invariants"}, {"matrix", matrix_path}}},
               {"n", x.n()},
               {"invariants", jr::io::to_json(jr::invariants(x))},
               {"regular_semisimple", jr::is_regular_semisimple(x)}};
      emit(common, out.dump(2) + "\n");
      return 0;
    }

    if (*cls) {
      auto desc = jr::io::class_from_json(jr::io::read_file(class_path));
      auto c = jr::build_class(desc);
      json reps = json::array();
      bool ok = true;
      for (const auto& eps : jr::enumerate_eps_subsets(c.I0)) {
        auto x = jr::orbit_representative(c, eps);
        bool same = jr::invariants(x) == c.inv;
        ok = ok && same;
        reps.push_back(json{{"I", eps.str()}, {"X", jr::io::to_json(x)}, {"same_class", same}});
      }
      json alpha = json::array();
      for (const auto& a : c.alpha) alpha.push_back(jr::io::to_json(a));
      json censuses = json::array();
      for (unsigned p : primes) {
        auto cc = jr::class_orbit_count(desc, p);
        ok = ok && cc.pass();
        censuses.push_back(jr::io::to_json(cc));
      }
      json out{{"config", {{"command", "classify"}, {"class", class_path}, {"primes", primes}}},
               {"class", jr::io::to_json(desc)},
               {"alpha", alpha},
               {"I0", c.I0},
               {"orbit_classes", reps.size()},
               {"invariants", jr::io::to_json(c.inv)},
               {"representatives", reps},
               {"census", censuses},
               {"pass", ok}};
      emit(common, out.dump(2) + "\n");
      return ok ? 0 : 1;
    }

    if (*par) {
      require_n(par_n, 1, 8, "parabolics");
      auto ps = jr::enumerate_rel_std(par_n);
      if (list) {
        json a = json::array();
        for (const auto& q : ps) a.push_back(jr::io::to_json(q));
        emit(common, a.dump(2) + "\n");
      } else {
        emit(common, json{{"n", par_n}, {"count", ps.size()}, {"bruteforce_count", jr::count_rel_std_bruteforce(par_n)}}.dump(2) + "\n");
      }
      return 0;
    }

    if (*ver) {
      const std::string suite = suite_name;
      auto conv = gamma_sign == "arthur" ? jr::GammaSign::arthur : jr::GammaSign::as_written;
      if (samples < 1) throw std::invalid_argument("--samples must be positive");
      auto eta = parse_int_list(eta_list);
      json config{{"command", "verify"}, {"suite", suite}, {"n", ver_n}, {"samples", samples}, {"seed", seed},
                  {"gamma_sign", gamma_sign}};
      std::vector<jr::CheckReport> reps;
      if (suite == "cones" || suite == "all") {
        auto r = cone_suite(ver_n, samples, seed, conv);
        reps.insert(reps.end(), r.begin(), r.end());
      }
      if (suite == "parabolics" || suite == "all") {
        auto r = parabolic_suite(ver_n);
        reps.insert(reps.end(), r.begin(), r.end());
      }
      if (suite == "rrss" || suite == "all") {
        config["I0"] = i0_size;
        config["eta"] = eta;
        auto r = rrss_suite(i0_size, eta, std::min(samples, 100L), seed);
        reps.insert(reps.end(), r.begin(), r.end());
      }
      return finish_checks(common, config, reps);
    }

    if (*rr) {
      auto eta = parse_int_list(eta_list);
      if (rrss_samples < 1) throw std::invalid_argument("--samples must be positive");
      json config{{"command", "rrss verify"}, {"I0", i0_size}, {"eta", eta}, {"samples", rrss_samples}, {"seed", seed}};
      return finish_checks(common, config, rrss_suite(i0_size, eta, rrss_samples, seed));
    }

    if (*cen) {
      require_n(cen_n, 1, 3, "census");
      jr::FiniteSpace space(static_cast<std::size_t>(cen_n), cen_p);
      jr::CensusReport rep;
      std::uint64_t k = cen_samples;
      if (k == 0 && !space.enumerable()) k = 10000;  // declared fallback
      if (k > 0) rep = jr::verify_separation_sampled(static_cast<std::size_t>(cen_n), cen_p, k, seed);
      else rep = jr::verify_separation(static_cast<std::size_t>(cen_n), cen_p);
      json summary = jr::io::to_json(rep);
      summary["config"] = json{{"command", "census"}, {"n", cen_n}, {"p", cen_p}, {"sample", k}, {"seed", seed}};
      if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw std::invalid_argument("cannot write " + summary_path);
        out << summary.dump(2) << "\n";
      }
      if (common.format == "csv" && !rep.sampled) emit(common, jr::census_csv(rep));
      else emit(common, summary.dump(2) + "\n");
      return rep.pass() ? 0 : 1;
    }

    if (*pe) {
      auto q = parse_parabolic(pe_n, pe_par);
      const Q s = jr::parse_q(pe_s);
      auto x = parse_point(pe_x);
      if (x.size() != static_cast<std::size_t>(pe_n + 1))
        throw std::invalid_argument("--X needs n+1 = " + std::to_string(pe_n + 1) + " coordinates");
      if (q.d() > 3) throw std::invalid_argument("pexp: rank above 3 is not supported");
      jr::Lattice lat(pe_n);
      const std::size_t qi = lat.index_of(q);
      json config{{"command", "pexp"}, {"n", pe_n}, {"parabolic", q.str()}, {"s", s.get_str()}, {"X", jr::io::to_json(x)}, {"tol", tol}};
      json exps = json::array();
      for (std::size_t r = 0; r < lat.size(); ++r) {
        if (!lat.contains(r, qi)) continue;
        auto rho_r = jr::rho_Q_s(lat[r]);
        Q e = jr::pair(rho_r, jr::project(lat[r], x)).eval(s);
        exps.push_back(json{{"R", lat[r].str()}, {"exponent", jr::io::to_json(e)}});
      }
      auto quad = jr::p_Q_s_quadrature(lat, qi, s.get_d(), x, tol);
      json out{{"config", config}, {"rank", q.d()}, {"exponents", exps}};
      bool ok = true;
      if (q.is_full()) {
        out["constant_term"] = json{{"value", 1.0}, {"convention", "empty integral"}};
        out["quadrature_check"] = json{{"quadrature", quad.value}, {"reference", 1.0}, {"pass", quad.value == 1.0}};
        ok = quad.value == 1.0;
      } else if (q.d() == 1) {
        auto r = jr::p_Q_s_rank1(q, s, x, true);
        const double ref = r.value();
        const double rel = std::abs(quad.value - ref) / std::max(1e-300, std::abs(ref));
        ok = ref == 0 ? std::abs(quad.value) < 1e-12 : rel < 1e-6;
        out["constant_term"] = json{{"value", r.constant_term()}, {"a", jr::io::to_json(r.a)}, {"scale_sq", jr::io::to_json(r.scale_sq)},
                                    {"degenerate", r.degenerate}, {"convention", "with_j"}};
        out["quadrature_check"] = json{{"quadrature", quad.value}, {"exact", ref}, {"relative_error", rel}, {"pass", ok}};
      } else {
        if (s == 1 || s == -1) throw std::domain_error("pexp: the constant-term fit needs s outside {-1, 1}");
        auto fit = jr::fit_constant_term(lat, qi, s, tol);
        ok = fit.winner == "with_j" && fit.error < 1e-4;
        out["constant_term"] = json{{"value", fit.with_j}, {"convention", "with_j"}, {"with_j", fit.with_j}, {"without_j", fit.without_j}};
        out["quadrature_check"] = json{{"quadrature", quad.value},
                                       {"fit_points", json::array({jr::io::to_json(fit.x)})},
                                       {"fitted_constant", fit.constant},
                                       {"winner", fit.winner},
                                       {"error", fit.error},
                                       {"pass", ok}};
      }
      emit(common, out.dump(2) + "\n");
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
