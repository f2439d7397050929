// Test-only oracles, deliberately independent of the library's
// implementation paths: the index oracle uses Floyd-Warshall distances
// instead of per-vertex BFS, and isomorphism is decided by trying every
// permutation.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "abcgg/graph.hpp"

namespace oracle {

// Graovac-Ghorbani index from Floyd-Warshall distances.
inline double abcgg_value(const abcgg::Graph& g) {
  const int n = g.order();
  const int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  double total = 0.0;
  for (const auto& [u, v] : g.edges()) {
    int nu = 0, nv = 0;
    for (int w = 0; w < n; ++w) {
      if (d[u][w] < d[v][w]) ++nu;
      if (d[v][w] < d[u][w]) ++nv;
    }
    total += std::sqrt((nu + nv - 2.0) / (double(nu) * nv));
  }
  return total;
}

// Exhaustive isomorphism test; factorial in n, keep n small.
inline bool isomorphic_brute(const abcgg::Graph& a, const abcgg::Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Elementary closed forms used as derived expectations.
inline double path_value(int n) {
  double s = 0.0;
  for (int i = 1; i <= n - 1; ++i)
    s += std::sqrt((n - 2.0) / (double(i) * (n - i)));
  return s;
}

inline double cycle_value(int n) {
  if (n % 2 == 0) return 2.0 * std::sqrt(n - 2.0);
  return 2.0 * n / (n - 1.0) * std::sqrt(n - 3.0);
}

inline double complete_bipartite_value(int p, int q) {
  return double(p) * q * std::sqrt((p + q - 2.0) / (double(p) * q));
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline abcgg::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<abcgg::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return abcgg::Graph(n, std::move(edges));
}

inline abcgg::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  for (;;) {
    auto g = random_graph(rng, n, p);
    if (abcgg::is_connected(g)) return g;
  }
}

}  // namespace oracle
