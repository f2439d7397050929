#pragma once

#include <cstdint>
#include <string>

#include "abcgg/graph.hpp"

namespace abcgg {

// Largest order the certificate supports.
inline constexpr int kCertificateMaxOrder = 16;

// Canonical certificate: a byte string that is identical for two graphs
// exactly when they are isomorphic. Computed as the minimum adjacency
// bitstring over vertex permutations, restricted to permutations that
// respect an iteratively refined degree partition and pruned by
// branch-and-bound with twin elimination. Exact, not hash based.
//
// Layout: byte 0 is the order n, followed by the packed upper triangle
// of the canonical adjacency matrix (rows k = 1..n-1, bits j = 0..k-1,
// most significant bit first).
std::string canonical_certificate(const Graph& g);

// Same certificate from adjacency bitmask rows (bit w of adjacency[v]
// set iff v and w are adjacent); avoids building a Graph in hot loops.
std::string canonical_certificate(int n, const std::uint32_t* adjacency);

std::string to_hex(const std::string& bytes);

}  // namespace abcgg
