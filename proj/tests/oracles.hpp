#pragma once

// Brute-force reference computations, written independently of the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

// Floyd-Warshall on unit edges.
inline Table all_pairs(std::size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  const int inf = std::numeric_limits<int>::max() / 4;
  Table d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// 2 (x, y)_p
inline int product2(const Table& d, std::size_t x, std::size_t y, std::size_t p) {
  return d[x][p] + d[y][p] - d[x][y];
}

// Smallest delta with (x,y)_p >= min((x,z)_p, (y,z)_p) - delta for all x, y, z, p.
// Returned doubled so half-integers stay exact.
inline int gromov_delta_doubled(const Table& d) {
  const std::size_t n = d.size();
  int worst = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          worst = std::max(worst, std::min(product2(d, x, z, p), product2(d, y, z, p)) - product2(d, x, y, p));
  return worst;
}

// Enumerates every subsequence of sample indices that keeps the first and last
// sample and whose consecutive image distances are all >= delta; returns the best
// sum, or -1 when no such subsequence exists.
inline long long delta_length(const Table& d, const std::vector<unsigned>& points, long long delta) {
  const std::size_t m = points.size();
  if (m < 2) return -1;
  const std::size_t inner = m - 2;
  long long best = -1;
  for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
    std::vector<std::size_t> chosen{0};
    for (std::size_t i = 0; i < inner; ++i)
      if (mask & (1u << i)) chosen.push_back(i + 1);
    chosen.push_back(m - 1);
    long long sum = 0;
    bool ok = true;
    for (std::size_t k = 1; k < chosen.size() && ok; ++k) {
      long long step = d[points[chosen[k - 1]]][points[chosen[k]]];
      if (step < delta) ok = false;
      sum += step;
    }
    if (ok) best = std::max(best, sum);
  }
  return best;
}

} // namespace oracle
