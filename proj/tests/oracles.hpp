#pragma once

// Brute-force oracles shared by the unit tests and the acceptance run.

#include <algorithm>
#include <vector>

#include "jr/eps_subset.hpp"

namespace oracle {

using jr::EpsSubset;

// mu_J from flags of coordinate subspaces of W = F_I (+) D_0. Coordinates
// 0..c belong to F_{I \ I0} (+) D_0 (coordinate 0 is D_0), then deg_i
// coordinates for each i in I0. A parabolic containing M_{I0~} is an ordered
// set partition of the coordinates in which every Levi block lies in one
// part; I_Q takes +i for blocks before the part holding D_0, -i after it.
inline long mu_coordinates(const EpsSubset& j, const std::vector<int>& degs, int c) {
  std::vector<int> owner(static_cast<std::size_t>(c + 1), 0);
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (int t = 0; t < degs[i]; ++t) owner.push_back(static_cast<int>(i + 1));
  const std::size_t m = owner.size();
  std::vector<std::size_t> part(m, 0);
  long acc = 0;
  for (;;) {
    std::size_t nparts = *std::max_element(part.begin(), part.end()) + 1;
    std::vector<bool> hit(nparts, false);
    for (auto v : part) hit[v] = true;
    bool ok = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
    for (std::size_t a = 0; ok && a < m; ++a)
      for (std::size_t b = 0; ok && b < m; ++b)
        if (owner[a] == owner[b] && part[a] != part[b]) ok = false;
    if (ok) {
      std::vector<int> e;
      for (std::size_t i = 1; i <= degs.size(); ++i) {
        std::size_t where = 0;
        for (std::size_t a = 0; a < m; ++a)
          if (owner[a] == static_cast<int>(i)) where = part[a];
        if (where < part[0]) e.push_back(static_cast<int>(i));
        if (where > part[0]) e.push_back(-static_cast<int>(i));
      }
      if (EpsSubset(e) == j) acc += (nparts - 1) % 2 ? -1 : 1;
    }
    std::size_t i = 0;
    while (i < m && ++part[i] == m) part[i++] = 0;
    if (i == m) break;
  }
  return acc;
}

// chains empty < S_1 < ... < S_i = {1..m} by walking subsets as bitmasks
inline long chain_count(int i, int m) {
  const unsigned full = (1u << m) - 1;
  std::vector<std::vector<long>> ways(static_cast<std::size_t>(i + 1), std::vector<long>(full + 1, 0));
  ways[0][0] = 1;
  for (int step = 1; step <= i; ++step)
    for (unsigned prev = 0; prev <= full; ++prev) {
      if (!ways[step - 1][prev]) continue;
      for (unsigned next = 0; next <= full; ++next)
        if ((next & prev) == prev && next != prev) ways[step][next] += ways[step - 1][prev];
    }
  return ways[i][full];
}

// Calls fn(degs, c) for #I0 = k <= max_k, deg_i >= 1, c >= 0 and
// sum deg_i + c <= max_n.
template <class Fn>
int for_each_degree_profile(int max_k, int max_n, Fn fn) {
  int count = 0;
  for (int k = 0; k <= max_k; ++k) {
    std::vector<int> degs(static_cast<std::size_t>(k), 1);
    for (;;) {
      int used = 0;
      for (int d : degs) used += d;
      for (int c = 0; used + c <= max_n; ++c, ++count) fn(degs, c);
      std::size_t i = 0;
      while (i < degs.size() && ++degs[i] > max_n) degs[i++] = 1;
      if (i == degs.size()) break;
    }
  }
  return count;
}

}  // namespace oracle
