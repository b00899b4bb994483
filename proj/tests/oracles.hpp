#pragma once
// Independent reference computations shared by the unit tests.

#include <algorithm>
#include <set>
#include <vector>

#include "tcores/partition.hpp"

namespace oracle {

using tcores::Int;

// Euler's pentagonal recurrence.
inline std::vector<Int> partition_numbers(int n_max) {
  std::vector<Int> p(n_max + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const Int sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

// A t-core's beta set is closed under moving a bead up one level.
inline bool beta_set_is_t_core(const tcores::Partition& p, int t) {
  std::set<Int> beta;
  const int s = p.length();
  for (int j = 1; j <= s; ++j) beta.insert(p.part(j) - j + s);
  return std::all_of(beta.begin(), beta.end(), [&](Int b) { return b < t || beta.contains(b - t); });
}

// c_3(n) = d_{1,3}(3n+1) - d_{2,3}(3n+1).
inline Int c3(Int n) {
  const Int m = 3 * n + 1;
  Int c = 0;
  for (Int d = 1; d <= m; ++d) {
    if (m % d) continue;
    if (d % 3 == 1) ++c;
    if (d % 3 == 2) --c;
  }
  return c;
}

inline Int count_triples_bruteforce(Int target) {
  Int c = 0;
  for (Int x = -100; x <= 100; ++x)
    for (Int y = -100; y <= 100; ++y) {
      const Int rest = target - x * x - y * y;
      if (rest < 0) continue;
      Int z = 0;
      while (z * z < rest) ++z;
      if (z * z == rest) c += z == 0 ? 1 : 2;
    }
  return c;
}

}  // namespace oracle
