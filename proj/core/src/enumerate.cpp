#include "abcgg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "abcgg/certificate.hpp"
#include "abcgg/index.hpp"
#include "parallel.hpp"

namespace abcgg {
namespace {

// All no-pendant family parameters of order n, valid from n = 4 (where
// the only member is the theta graph with path lengths {1,2,2}).
std::vector<FamilyParams> no_pendant_params_from(int n) {
  std::vector<FamilyParams> out;
  for (int p = 3; 2 * p <= n + 1; ++p) {
    int q = n + 1 - p;
    if (q >= 3) out.push_back({FamilyKind::kB1, p, q, 0, n});
  }
  for (int l = 1; l <= n - 5; ++l)
    for (int p = 3; 2 * p <= n + 1 - l; ++p) {
      int q = n + 1 - l - p;
      out.push_back({FamilyKind::kB2, p, q, l, n});
    }
  // B3 classes correspond to path-length multisets a <= b <= c with
  // a+b+c = n+1 and at most one unit path; (p, l, q) = (a+b, a, a+c).
  for (int a = 1; 3 * a <= n + 1; ++a)
    for (int b = std::max(a, 2); 2 * b <= n + 1 - a; ++b) {
      int c = n + 1 - a - b;
      out.push_back({FamilyKind::kB3, a + b, a + c, a, n});
    }
  return out;
}

void sort_dedupe(std::vector<CatalogEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.cert < b.cert; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const CatalogEntry& a, const CatalogEntry& b) {
                              return a.cert == b.cert;
                            }),
                entries.end());
}

void fill_index(std::vector<CatalogEntry>& entries, const EnumerateOptions& opts) {
  if (!opts.with_index) return;
  detail::parallel_for(static_cast<int>(entries.size()), opts.jobs,
                       [&](int i) { entries[i].abcgg = abc_gg_value(entries[i].graph); });
}

// Enumerates every way of hanging rooted trees on the vertices of a
// base graph so that the result has `n` vertices, and feeds each graph
// to `sink`. Tree shapes come from `trees_by_size`.
class Attacher {
 public:
  Attacher(const Graph& base, FamilyParams base_params, int n,
           const std::vector<std::vector<std::vector<int>>>& trees,
           std::vector<CatalogEntry>& sink)
      : base_(base),
        base_params_(base_params),
        n_(n),
        trees_(trees),
        sink_(sink),
        sizes_(base.order(), 1) {
    edges_ = base_.edges();
    edges_.reserve(n_ + 1);
  }

  void run() { choose_sizes(0, n_ - base_.order()); }

 private:
  void choose_sizes(int slot, int left) {
    const int b = base_.order();
    if (slot == b) {
      if (left == 0) place_trees(0, b);
      return;
    }
    // the remaining slots can always absorb what is left, so sizes run
    // from 1 (nothing attached) to left + 1
    for (int s = 1; s <= left + 1; ++s) {
      sizes_[slot] = s;
      choose_sizes(slot + 1, left - (s - 1));
    }
    sizes_[slot] = 1;
  }

  void place_trees(int slot, int next_vertex) {
    const int b = base_.order();
    if (slot == b) {
      emit();
      return;
    }
    const int s = sizes_[slot];
    if (s == 1) {
      place_trees(slot + 1, next_vertex);
      return;
    }
    const std::size_t mark = edges_.size();
    for (const auto& parents : trees_[s]) {
      // tree vertex 0 is the base vertex; i+1 maps to next_vertex + i
      for (int i = 0; i + 1 < s; ++i) {
        int par = parents[i];
        int pv = par == 0 ? slot : next_vertex + par - 1;
        edges_.emplace_back(pv, next_vertex + i);
      }
      place_trees(slot + 1, next_vertex + s - 1);
      edges_.resize(mark);
    }
  }

  void emit() {
    Graph g(n_, edges_);
    CatalogEntry entry{g, canonical_certificate(g), std::nullopt, std::nullopt};
    if (n_ == base_.order()) entry.family = base_params_;
    sink_.push_back(std::move(entry));
  }

  const Graph& base_;
  FamilyParams base_params_;
  int n_;
  const std::vector<std::vector<std::vector<int>>>& trees_;
  std::vector<CatalogEntry>& sink_;
  std::vector<int> sizes_;
  std::vector<Edge> edges_;
};

}  // namespace

std::vector<std::vector<int>> rooted_trees(int t) {
  if (t < 1) throw DomainError("rooted_trees: size must be at least 1");
  std::vector<std::vector<int>> out;
  std::vector<int> level(t);
  std::iota(level.begin(), level.end(), 1);  // the path: levels 1..t
  std::vector<int> last(t + 2, -1);
  for (;;) {
    std::vector<int> parents(t - 1);
    last[1] = 0;
    for (int i = 1; i < t; ++i) {
      parents[i - 1] = last[level[i] - 1];
      last[level[i]] = i;
    }
    out.push_back(std::move(parents));
    int p = -1;
    for (int i = t - 1; i >= 0; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < t; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

std::vector<FamilyParams> no_pendant_params(int n) {
  if (n < 5) throw DomainError("no_pendant_params: order must be at least 5");
  return no_pendant_params_from(n);
}

std::vector<CatalogEntry> enumerate_b1(int n, const EnumerateOptions& opts) {
  if (n < 5) throw DomainError("enumerate_b1: order must be at least 5");
  std::vector<CatalogEntry> out;
  for (int p = 3; 2 * p <= n + 1; ++p) {
    int q = n + 1 - p;
    if (q < 3) continue;
    FamilyParams fp{FamilyKind::kB1, p, q, 0, n};
    Graph g = fp.build();
    std::string cert =
        n <= kCertificateMaxOrder ? canonical_certificate(g) : std::string{};
    out.push_back({std::move(g), std::move(cert), fp, std::nullopt});
  }
  if (n <= kCertificateMaxOrder) sort_dedupe(out);
  fill_index(out, opts);
  return out;
}

std::vector<CatalogEntry> enumerate_no_pendant(int n, const EnumerateOptions& opts) {
  if (n < 5) throw DomainError("enumerate_no_pendant: order must be at least 5");
  if (n > kCertificateMaxOrder)
    throw LimitError("enumerate_no_pendant: order above certificate limit " +
                     std::to_string(kCertificateMaxOrder));
  std::vector<CatalogEntry> entries;
  for (const auto& fp : no_pendant_params_from(n)) {
    Graph g = fp.build();
    entries.push_back({g, canonical_certificate(g), fp, std::nullopt});
  }
  sort_dedupe(entries);
  fill_index(entries, opts);
  return entries;
}

std::vector<CatalogEntry> enumerate_bicyclic(int n, const EnumerateOptions& opts) {
  if (n < 5) throw DomainError("enumerate_bicyclic: order must be at least 5");
  if (n > opts.max_order)
    throw LimitError("enumerate_bicyclic: order " + std::to_string(n) +
                     " above configured limit " + std::to_string(opts.max_order));

  std::vector<std::vector<std::vector<int>>> trees_by_size(n - 4 + 2);
  for (int t = 1; t < static_cast<int>(trees_by_size.size()); ++t)
    trees_by_size[t] = rooted_trees(t);

  std::vector<FamilyParams> bases;
  for (int b = 4; b <= n; ++b) {
    auto fps = no_pendant_params_from(b);
    bases.insert(bases.end(), fps.begin(), fps.end());
  }

  std::vector<std::vector<CatalogEntry>> per_base(bases.size());
  detail::parallel_for(static_cast<int>(bases.size()), opts.jobs, [&](int i) {
    Graph base = bases[i].build();
    Attacher attacher(base, bases[i], n, trees_by_size, per_base[i]);
    attacher.run();
  });

  std::vector<CatalogEntry> entries;
  for (auto& chunk : per_base)
    for (auto& e : chunk) entries.push_back(std::move(e));
  sort_dedupe(entries);
  fill_index(entries, opts);
  return entries;
}

std::vector<CatalogEntry> brute_force_bicyclic(int n, const EnumerateOptions& opts) {
  if (n < 1) throw DomainError("brute_force_bicyclic: order must be at least 1");
  if (n > kBruteForceMaxOrder)
    throw LimitError("brute_force_bicyclic: order " + std::to_string(n) +
                     " above oracle limit " + std::to_string(kBruteForceMaxOrder));

  std::vector<Edge> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  const int total = static_cast<int>(all_pairs.size());
  const int m = n + 1;

  std::vector<CatalogEntry> entries;
  if (m > total) return entries;

  std::vector<std::string> seen;
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;

  for (;;) {
    std::array<std::uint32_t, 16> rows{};
    for (int i = 0; i < m; ++i) {
      auto [u, v] = all_pairs[pick[i]];
      rows[u] |= 1u << v;
      rows[v] |= 1u << u;
    }
    std::uint32_t reach = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= rows[v];
      }
      frontier = next & ~reach;
      reach |= frontier;
    }
    if (reach == full) {
      std::string cert = canonical_certificate(n, rows.data());
      auto it = std::lower_bound(seen.begin(), seen.end(), cert);
      if (it == seen.end() || *it != cert) {
        seen.insert(it, cert);
        std::vector<Edge> edges;
        edges.reserve(m);
        for (int i = 0; i < m; ++i) edges.push_back(all_pairs[pick[i]]);
        entries.push_back({Graph(n, std::move(edges)), std::move(cert),
                           std::nullopt, std::nullopt});
      }
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }

  sort_dedupe(entries);
  fill_index(entries, opts);
  return entries;
}

}  // namespace abcgg
