#include "abcgg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace abcgg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw DomainError("graph: order must be at least 1");
  for (auto& [u, v] : edges) {
    if (u == v) throw DomainError("graph: loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("graph: edge endpoint out of range for order " +
                        std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw DomainError("permuted: permutation size mismatch");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(es));
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (int s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (int v = 0; v < g.order(); ++v) m.mutable_at(s, v) = row[v];
  }
  return m;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) {
    return d == DistanceMatrix::kUnreachable;
  });
}

BicyclicClass classify_bicyclic(const Graph& g) {
  if (g.edge_count() != g.order() + 1 || !is_connected(g))
    return BicyclicClass::kNotBicyclic;
  return g.min_degree() == 1 ? BicyclicClass::kWithPendant
                             : BicyclicClass::kNoPendant;
}

const char* to_string(BicyclicClass c) {
  switch (c) {
    case BicyclicClass::kNotBicyclic: return "not-bicyclic";
    case BicyclicClass::kWithPendant: return "bicyclic-with-pendant";
    case BicyclicClass::kNoPendant: return "bicyclic-no-pendant";
  }
  return "?";
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1)
        throw DomainError("edge list: first line must be a positive vertex count");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v))
      throw DomainError("edge list: line " + std::to_string(lineno) +
                        " must contain two vertex labels");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw DomainError("edge list: missing vertex count line");
  return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open edge list file: " + path);
  return read_edge_list(in);
}

}  // namespace abcgg
