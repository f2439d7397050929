#pragma once

#include <string>

#include "abcgg/graph.hpp"

namespace abcgg {

enum class FamilyKind { kB1, kB2, kB3, kH, kCycle, kPath, kComplete, kCompleteBipartite };

// Tagged parameter record for the graph families. Which fields are used
// depends on the kind: B1 uses (p, q), B2 and B3 use (p, l, q), H uses n,
// cycle/path/complete use n, complete bipartite uses (p, q).
struct FamilyParams {
  FamilyKind kind = FamilyKind::kCycle;
  int p = 0;
  int q = 0;
  int l = 0;
  int n = 0;

  int order() const;
  std::string descriptor() const;  // e.g. "b1:3,7", "b3:4,2,8", "h:8"
  Graph build() const;             // validates and constructs
};

Graph cycle_graph(int n);              // n >= 3
Graph path_graph(int n);               // n >= 1, single vertex when n = 1
Graph complete_graph(int n);           // n >= 1
Graph complete_bipartite(int p, int q);  // p, q >= 1

// Two cycles C_p and C_q sharing exactly one vertex; the shared vertex
// gets label 0. Order p+q-1, one vertex of degree 4, rest degree 2.
Graph b1(int p, int q);

// Dumbbell: disjoint cycles C_p and C_q joined by a path with l edges
// between a vertex of each. Order p+q+l-1, two vertices of degree 3.
Graph b2(int p, int l, int q);

// Theta graph built intrinsically: two hub vertices (labels 0 and 1)
// joined by three internally disjoint paths of lengths l, p-l and q-l.
// This realizes cycle lengths p, q and p+q-2l with order p+q-l-1 and is
// the reading consistent with that order formula. At most one of the
// three paths may have length 1, otherwise the graph would need a
// multi-edge between the hubs.
Graph b3(int p, int l, int q);

// K4 minus an edge with n-4 pendant vertices attached to one vertex of
// degree 3 (label 0). Order n >= 5, n+1 edges.
Graph h_graph(int n);

// Parses "b1:p,q", "b2:p,l,q", "b3:p,l,q", "h:n", "cycle:n", "path:n",
// "complete:n", "kpq:p,q". Throws DomainError on anything else.
FamilyParams parse_family(const std::string& descriptor);

}  // namespace abcgg
