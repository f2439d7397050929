#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "abcgg/errors.hpp"

namespace abcgg {

// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
// Edges are validated (no loops, endpoints in range), deduplicated and
// kept in sorted order, so two equal graphs have identical edge lists.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  bool has_edge(int u, int v) const;

  // Relabeled copy: vertex v becomes perm[v]. perm must be a permutation
  // of 0..n-1.
  Graph permuted(const std::vector<int>& perm) const;

  // Sorted degree sequence, descending.
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Exact hop counts between all vertex pairs. Unreachable pairs hold the
// dedicated kUnreachable marker, never a large stand-in value.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
  int& mutable_at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<int> d_;
};

// Hop counts from source to every vertex (kUnreachable where no path).
std::vector<int> bfs_distances(const Graph& g, int source);

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

enum class BicyclicClass { kNotBicyclic, kWithPendant, kNoPendant };

// Bicyclic means connected with exactly n+1 edges; the pendant flag
// reports whether any vertex has degree one.
BicyclicClass classify_bicyclic(const Graph& g);

const char* to_string(BicyclicClass c);

// Edge-list text format: first line "n", then one "u v" pair per line.
// Blank lines are skipped and "#" starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list_file(const std::string& path);

}  // namespace abcgg
