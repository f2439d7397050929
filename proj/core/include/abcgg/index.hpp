#pragma once

#include <vector>

#include "abcgg/graph.hpp"

namespace abcgg {

// Proximity split of an edge (u, v): n_u counts the vertices strictly
// closer to u than to v (u itself included), n_v the mirror count, and
// eq the equidistant vertices, which contribute to neither.
struct EdgeSplit {
  Edge edge{};
  int n_u = 0;
  int n_v = 0;
  int eq = 0;
};

struct EdgeTerm {
  EdgeSplit split;
  double contribution = 0.0;
};

struct IndexReport {
  double total = 0.0;
  std::vector<EdgeTerm> per_edge;  // in the graph's sorted edge order
};

// Split for one edge of a connected graph, from exact BFS hop counts.
EdgeSplit edge_split(const Graph& g, int u, int v);

// sqrt((n_u + n_v - 2) / (n_u * n_v)); exactly 0 when n_u = n_v = 1.
double edge_contribution(const EdgeSplit& split);

// Graovac-Ghorbani index with per-edge breakdown.
IndexReport abc_gg(const Graph& g);

// Total only; same arithmetic as abc_gg without assembling the report.
double abc_gg_value(const Graph& g);

}  // namespace abcgg
