#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace jr {

// Outcome of one verification sweep.
struct CheckReport {
  std::string identity;
  std::string reference;
  long cases = 0;
  long degenerate = 0;  // samples rejected because a pairing vanished
  long failure_count = 0;
  std::vector<std::string> failures;  // first few counterexamples

  bool pass() const { return failure_count == 0 && cases > 0; }
  void fail(const std::string& what) {
    ++failure_count;
    if (failures.size() < 20) failures.push_back(what);
  }
  void merge(const CheckReport& o) {
    cases += o.cases;
    degenerate += o.degenerate;
    failure_count += o.failure_count;
    for (const auto& f : o.failures)
      if (failures.size() < 20) failures.push_back(f);
  }
};

using Rng = std::mt19937_64;

// Random rational a/b with |a| <= num_bound and 1 <= b <= den_bound.
inline Q random_q(Rng& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  return frac(num(rng), den(rng));
}

inline std::vector<Q> random_point(Rng& rng, std::size_t dim, long num_bound = 1000, long den_bound = 7) {
  std::vector<Q> h;
  for (std::size_t i = 0; i < dim; ++i) h.push_back(random_q(rng, num_bound, den_bound));
  return h;
}

inline std::string point_str(const std::vector<Q>& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + h[i].get_str();
  return s + ")";
}

}  // namespace jr
