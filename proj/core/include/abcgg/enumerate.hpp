#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcgg/families.hpp"
#include "abcgg/graph.hpp"

namespace abcgg {

// General enumeration is capped by default; the cap is configurable per
// call. Expect seconds up to order 10, around a minute at order 12.
inline constexpr int kDefaultEnumerationLimit = 12;

// The labeled brute-force oracle walks all C(n(n-1)/2, n+1) edge sets.
inline constexpr int kBruteForceMaxOrder = 8;

struct CatalogEntry {
  Graph graph;
  std::string cert;                    // canonical certificate bytes
  std::optional<FamilyParams> family;  // provenance when family-built
  std::optional<double> abcgg;         // filled lazily / on request
};

struct EnumerateOptions {
  int jobs = 1;
  int max_order = kDefaultEnumerationLimit;
  bool with_index = false;  // fill CatalogEntry::abcgg
};

// Parameter tuples of every no-pendant bicyclic family member of order
// n: B1 with p <= q, B2 with p <= q, B3 canonicalized by the sorted
// multiset of its three path lengths.
std::vector<FamilyParams> no_pendant_params(int n);

// Just the B1 classes of order n (certificates omitted above the
// certificate order limit; these scans are allowed to run larger).
std::vector<CatalogEntry> enumerate_b1(int n, const EnumerateOptions& opts = {});

// One entry per isomorphism class of no-pendant bicyclic graphs of
// order n, sorted by certificate.
std::vector<CatalogEntry> enumerate_no_pendant(int n, const EnumerateOptions& opts = {});

// One entry per isomorphism class of connected graphs with n+1 edges.
// Built by attaching every distribution of rooted trees to every
// no-pendant base of order b <= n; duplicates are removed by
// certificate, not by generation-time symmetry breaking.
std::vector<CatalogEntry> enumerate_bicyclic(int n, const EnumerateOptions& opts = {});

// Independent oracle: exhaustive filter over all labeled graphs with
// n+1 edges, keeping connected ones and deduplicating by certificate.
std::vector<CatalogEntry> brute_force_bicyclic(int n, const EnumerateOptions& opts = {});

// All rooted trees on t vertices, one per isomorphism class, generated
// by the level-sequence successor method. Vertex 0 is the root and
// entry i of a result is the parent of vertex i+1.
std::vector<std::vector<int>> rooted_trees(int t);

}  // namespace abcgg
