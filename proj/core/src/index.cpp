#include "abcgg/index.hpp"

#include <algorithm>
#include <cmath>

namespace abcgg {

EdgeSplit edge_split(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw DomainError("edge_split: (" + std::to_string(u) + "," +
                      std::to_string(v) + ") is not an edge");
  auto du = bfs_distances(g, u);
  if (std::count(du.begin(), du.end(), DistanceMatrix::kUnreachable) > 0)
    throw DomainError("edge_split: graph is disconnected");
  auto dv = bfs_distances(g, v);

  EdgeSplit s;
  s.edge = {u, v};  // counts follow the caller's orientation
  for (int w = 0; w < g.order(); ++w) {
    if (du[w] < dv[w])
      ++s.n_u;
    else if (dv[w] < du[w])
      ++s.n_v;
    else
      ++s.eq;
  }
  return s;
}

double edge_contribution(const EdgeSplit& split) {
  const double nu = split.n_u;
  const double nv = split.n_v;
  return std::sqrt((nu + nv - 2.0) / (nu * nv));
}

IndexReport abc_gg(const Graph& g) {
  auto dist = all_pairs_distances(g);
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (!dist.reachable(0, v))
      throw DomainError("abc_gg: graph is disconnected");

  IndexReport report;
  report.per_edge.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    EdgeSplit s;
    s.edge = {u, v};
    for (int w = 0; w < n; ++w) {
      int du = dist.at(u, w), dv = dist.at(v, w);
      if (du < dv)
        ++s.n_u;
      else if (dv < du)
        ++s.n_v;
      else
        ++s.eq;
    }
    double c = edge_contribution(s);
    report.total += c;
    report.per_edge.push_back({s, c});
  }
  return report;
}

double abc_gg_value(const Graph& g) {
  auto dist = all_pairs_distances(g);
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (!dist.reachable(0, v))
      throw DomainError("abc_gg: graph is disconnected");
  double total = 0.0;
  for (const auto& [u, v] : g.edges()) {
    int nu = 0, nv = 0;
    for (int w = 0; w < n; ++w) {
      int du = dist.at(u, w), dv = dist.at(v, w);
      nu += du < dv;
      nv += dv < du;
    }
    total += std::sqrt((nu + nv - 2.0) / (double(nu) * nv));
  }
  return total;
}

}  // namespace abcgg
