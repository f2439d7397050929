#include "abcgg/certificate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace abcgg {
namespace {

constexpr std::uint32_t kRowMax = 0xFFFFFFFFu;

// Branch-and-bound search for the minimum adjacency bitstring over all
// permutations that respect the refined color partition. Row k holds the
// adjacency bits of the vertex at position k towards positions j < k,
// with bit weight 1 << (15 - j) so integer order equals bitstring order.
struct Search {
  int n = 0;
  std::array<std::uint32_t, 16> vert_adj{};
  std::array<int, 16> color{};
  std::array<int, 16> pos_color{};
  std::array<std::uint32_t, 16> placed_adj{};
  std::array<std::uint32_t, 16> best{};
  std::uint32_t used = 0;

  void refine_colors();
  void run();
  void descend(int k);
};

// Iterated neighborhood refinement. A vertex key packs its current color
// and the descending-sorted colors of its neighbors into nibbles; equal
// colors imply equal degree, so the zero padding never collides.
void Search::refine_colors() {
  std::array<std::pair<std::uint64_t, int>, 16> order{};
  for (int v = 0; v < n; ++v)
    order[v] = {static_cast<std::uint64_t>(std::popcount(vert_adj[v])), v};

  auto compress = [&]() {
    std::sort(order.begin(), order.begin() + n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && order[i].first != order[i - 1].first) ++rank;
      color[order[i].second] = rank;
    }
    return rank + 1;
  };

  int ncolors = compress();
  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::array<int, 16> nb{};
      int cnt = 0;
      std::uint32_t m = vert_adj[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        nb[cnt++] = color[w];
      }
      std::sort(nb.begin(), nb.begin() + cnt, std::greater<>());
      std::uint64_t key = static_cast<std::uint64_t>(color[v]) << 60;
      for (int i = 0; i < cnt; ++i)
        key |= static_cast<std::uint64_t>(nb[i]) << (56 - 4 * i);
      order[v] = {key, v};
    }
    int next = compress();
    if (next == ncolors) break;
    ncolors = next;
  }
}

void Search::run() {
  refine_colors();
  std::array<int, 16> verts{};
  for (int v = 0; v < n; ++v) verts[v] = v;
  std::stable_sort(verts.begin(), verts.begin() + n,
                   [&](int a, int b) { return color[a] < color[b]; });
  for (int k = 0; k < n; ++k) pos_color[k] = color[verts[k]];
  best.fill(kRowMax);
  descend(0);
}

void Search::descend(int k) {
  if (k == n) return;
  std::array<int, 16> tried{};
  int ntried = 0;
  for (int v = 0; v < n; ++v) {
    if (used >> v & 1u) continue;
    if (color[v] != pos_color[k]) continue;
    bool twin = false;
    for (int t = 0; t < ntried && !twin; ++t) {
      int w = tried[t];
      twin = ((vert_adj[v] ^ vert_adj[w]) & ~((1u << v) | (1u << w))) == 0;
    }
    if (twin) continue;  // swapping with an already-tried twin is an automorphism
    tried[ntried++] = v;

    std::uint32_t row = placed_adj[v];
    if (row > best[k]) continue;
    if (row < best[k]) {
      best[k] = row;
      for (int j = k + 1; j < n; ++j) best[j] = kRowMax;
    }
    used |= 1u << v;
    std::uint32_t m = vert_adj[v];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      placed_adj[w] |= 1u << (15 - k);
    }
    descend(k + 1);
    m = vert_adj[v];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      placed_adj[w] &= ~(1u << (15 - k));
    }
    used &= ~(1u << v);
  }
}

}  // namespace

std::string canonical_certificate(const Graph& g) {
  const int n = g.order();
  if (n > kCertificateMaxOrder)
    throw LimitError("canonical_certificate: order " + std::to_string(n) +
                     " exceeds supported limit " +
                     std::to_string(kCertificateMaxOrder));
  std::array<std::uint32_t, 16> adj{};
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return canonical_certificate(n, adj.data());
}

std::string canonical_certificate(int n, const std::uint32_t* adjacency) {
  if (n > kCertificateMaxOrder)
    throw LimitError("canonical_certificate: order " + std::to_string(n) +
                     " exceeds supported limit " +
                     std::to_string(kCertificateMaxOrder));
  if (n < 1) throw DomainError("canonical_certificate: empty graph");

  Search s;
  s.n = n;
  for (int v = 0; v < n; ++v) s.vert_adj[v] = adjacency[v];
  s.run();

  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
  out.push_back(static_cast<char>(n));
  int nbits = 0;
  std::uint8_t acc = 0;
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((s.best[k] >> (15 - j)) & 1u));
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        nbits = 0;
        acc = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

}  // namespace abcgg
