#include "abcgg/families.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace abcgg {
namespace {

void ring(std::vector<Edge>& edges, const std::vector<int>& cyc) {
  const int k = static_cast<int>(cyc.size());
  for (int i = 0; i < k; ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % k]);
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle: order must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path: order must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw DomainError("complete: order must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1)
    throw DomainError("complete bipartite: both part sizes must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  return Graph(p + q, std::move(edges));
}

Graph b1(int p, int q) {
  if (p < 3 || q < 3) throw DomainError("b1: cycle sizes must be at least 3");
  std::vector<Edge> edges;
  std::vector<int> cp(p);
  for (int i = 0; i < p; ++i) cp[i] = i;
  ring(edges, cp);
  std::vector<int> cq(q);
  cq[0] = 0;
  for (int i = 1; i < q; ++i) cq[i] = p + i - 1;
  ring(edges, cq);
  return Graph(p + q - 1, std::move(edges));
}

Graph b2(int p, int l, int q) {
  if (p < 3 || q < 3) throw DomainError("b2: cycle sizes must be at least 3");
  if (l < 1) throw DomainError("b2: path length must be at least 1");
  std::vector<Edge> edges;
  std::vector<int> cp(p);
  for (int i = 0; i < p; ++i) cp[i] = i;
  ring(edges, cp);
  int prev = 0;
  for (int i = 0; i < l - 1; ++i) {
    edges.emplace_back(prev, p + i);
    prev = p + i;
  }
  const int hub = p + l - 1;
  edges.emplace_back(prev, hub);
  std::vector<int> cq(q);
  for (int i = 0; i < q; ++i) cq[i] = hub + i;
  ring(edges, cq);
  return Graph(p + q + l - 1, std::move(edges));
}

Graph b3(int p, int l, int q) {
  if (p < 3 || q < 3) throw DomainError("b3: cycle sizes must be at least 3");
  if (l < 1) throw DomainError("b3: path length must be at least 1");
  if (l >= p || l >= q)
    throw DomainError("b3: path parameter l must be smaller than both cycle sizes");
  const int lens[3] = {l, p - l, q - l};
  int unit = 0;
  for (int len : lens) unit += len == 1;
  if (unit > 1) throw DomainError("b3: two unit paths create a multi-edge");

  std::vector<Edge> edges;
  int next = 2;
  for (int len : lens) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph(p + q - l - 1, std::move(edges));
}

Graph h_graph(int n) {
  if (n < 5) throw DomainError("h: order must be at least 5");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (int v = 4; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

int FamilyParams::order() const {
  switch (kind) {
    case FamilyKind::kB1: return p + q - 1;
    case FamilyKind::kB2: return p + q + l - 1;
    case FamilyKind::kB3: return p + q - l - 1;
    case FamilyKind::kH:
    case FamilyKind::kCycle:
    case FamilyKind::kPath:
    case FamilyKind::kComplete: return n;
    case FamilyKind::kCompleteBipartite: return p + q;
  }
  return 0;
}

std::string FamilyParams::descriptor() const {
  auto s = [](int v) { return std::to_string(v); };
  switch (kind) {
    case FamilyKind::kB1: return "b1:" + s(p) + "," + s(q);
    case FamilyKind::kB2: return "b2:" + s(p) + "," + s(l) + "," + s(q);
    case FamilyKind::kB3: return "b3:" + s(p) + "," + s(l) + "," + s(q);
    case FamilyKind::kH: return "h:" + s(n);
    case FamilyKind::kCycle: return "cycle:" + s(n);
    case FamilyKind::kPath: return "path:" + s(n);
    case FamilyKind::kComplete: return "complete:" + s(n);
    case FamilyKind::kCompleteBipartite: return "kpq:" + s(p) + "," + s(q);
  }
  return "?";
}

Graph FamilyParams::build() const {
  switch (kind) {
    case FamilyKind::kB1: return b1(p, q);
    case FamilyKind::kB2: return b2(p, l, q);
    case FamilyKind::kB3: return b3(p, l, q);
    case FamilyKind::kH: return h_graph(n);
    case FamilyKind::kCycle: return cycle_graph(n);
    case FamilyKind::kPath: return path_graph(n);
    case FamilyKind::kComplete: return complete_graph(n);
    case FamilyKind::kCompleteBipartite: return complete_bipartite(p, q);
  }
  throw DomainError("family: unknown kind");
}

FamilyParams parse_family(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    throw DomainError("family descriptor must look like name:args, got \"" +
                      descriptor + "\"");
  std::string name = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);

  std::vector<int> args;
  const char* ptr = rest.data();
  const char* end = rest.data() + rest.size();
  while (ptr < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(ptr, end, value);
    if (ec != std::errc{})
      throw DomainError("family descriptor has a malformed number: \"" +
                        descriptor + "\"");
    args.push_back(value);
    ptr = next;
    if (ptr < end) {
      if (*ptr != ',')
        throw DomainError("family descriptor arguments must be comma separated");
      ++ptr;
    }
  }

  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw DomainError("family \"" + name + "\" takes " + std::to_string(k) +
                        " argument(s)");
  };
  FamilyParams fp;
  if (name == "b1") {
    want(2);
    fp = {FamilyKind::kB1, args[0], args[1], 0, 0};
  } else if (name == "b2") {
    want(3);
    fp = {FamilyKind::kB2, args[0], args[2], args[1], 0};
  } else if (name == "b3") {
    want(3);
    fp = {FamilyKind::kB3, args[0], args[2], args[1], 0};
  } else if (name == "h") {
    want(1);
    fp = {FamilyKind::kH, 0, 0, 0, args[0]};
  } else if (name == "cycle") {
    want(1);
    fp = {FamilyKind::kCycle, 0, 0, 0, args[0]};
  } else if (name == "path") {
    want(1);
    fp = {FamilyKind::kPath, 0, 0, 0, args[0]};
  } else if (name == "complete") {
    want(1);
    fp = {FamilyKind::kComplete, 0, 0, 0, args[0]};
  } else if (name == "kpq") {
    want(2);
    fp = {FamilyKind::kCompleteBipartite, args[0], args[1], 0, 0};
  } else {
    throw DomainError("unknown family \"" + name + "\"");
  }
  fp.n = fp.order();
  return fp;
}

}  // namespace abcgg
