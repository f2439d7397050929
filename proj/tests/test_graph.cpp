#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "abcgg/certificate.hpp"
#include "abcgg/families.hpp"
#include "abcgg/graph.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace abcgg;

TEST_CASE("construction normalizes and validates") {
  Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.order() == 3);
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  // duplicates collapse, orientation does not matter
  Graph p4(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}});
  CHECK(p4.edge_count() == 3);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(0, {}), DomainError);
}

TEST_CASE("distances") {
  auto c4 = cycle_graph(4);
  auto d = all_pairs_distances(c4);
  CHECK(d.at(0, 2) == 2);
  CHECK(d.at(0, 1) == 1);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      CHECK(d.at(u, v) == d.at(v, u));
      if (u == v)
        CHECK(d.at(u, v) == 0);
      else
        CHECK((d.at(u, v) == 1 || d.at(u, v) == 2));
    }

  auto p3 = path_graph(3);
  auto dp = all_pairs_distances(p3);
  CHECK(dp.at(0, 2) == 2);
  CHECK(dp.at(0, 1) == 1);

  // two disjoint edges: cross-component entries hold the sentinel
  Graph split(4, {{0, 1}, {2, 3}});
  auto ds = all_pairs_distances(split);
  CHECK(ds.at(0, 2) == DistanceMatrix::kUnreachable);
  CHECK_FALSE(ds.reachable(1, 3));
  CHECK(ds.at(0, 1) == 1);
}

TEST_CASE("distance properties on random connected graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 9);
    auto g = oracle::random_connected_graph(rng, n, 0.4);
    auto d = all_pairs_distances(g);
    for (int u = 0; u < n; ++u) {
      CHECK(d.at(u, u) == 0);
      for (int v = u + 1; v < n; ++v) {
        CHECK(d.at(u, v) == d.at(v, u));
        CHECK((d.at(u, v) == 1) == g.has_edge(u, v));
      }
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(cycle_graph(5)));
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_connected(two_triangles));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("bicyclic classification") {
  auto bowtie = b1(3, 3);
  CHECK(classify_bicyclic(bowtie) == BicyclicClass::kNoPendant);
  CHECK(classify_bicyclic(cycle_graph(5)) == BicyclicClass::kNotBicyclic);

  // bowtie plus one pendant vertex
  std::vector<Edge> edges = bowtie.edges();
  edges.push_back({0, 5});
  Graph pend(6, std::move(edges));
  CHECK(classify_bicyclic(pend) == BicyclicClass::kWithPendant);

  // disconnected graph with m = n + 1 is not bicyclic
  Graph dis(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {3, 5}});
  CHECK(classify_bicyclic(dis) == BicyclicClass::kNotBicyclic);

  SUBCASE("implication: bicyclic tags mean connected with m = n+1") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 4 + int(rng() % 6);
      auto g = oracle::random_graph(rng, n, 0.35);
      auto tag = classify_bicyclic(g);
      if (tag != BicyclicClass::kNotBicyclic) {
        CHECK(is_connected(g));
        CHECK(g.edge_count() == g.order() + 1);
      }
    }
  }
}

TEST_CASE("edge list round trip") {
  auto g = b2(3, 2, 4);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back == g);
  CHECK(canonical_certificate(back) == canonical_certificate(g));
}

TEST_CASE("edge list parsing") {
  std::istringstream ok("# comment\n5\n0 1\n\n1 2 # inline comment\n2 3\n3 4\n");
  Graph g = read_edge_list(ok);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);

  std::istringstream missing_n("0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing_n), DomainError);
  std::istringstream half_edge("3\n0\n");
  CHECK_THROWS_AS(read_edge_list(half_edge), DomainError);
  std::istringstream loop("3\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), DomainError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), DomainError);
}

TEST_CASE("permuted relabels") {
  auto g = path_graph(4);
  Graph h = g.permuted({3, 2, 1, 0});
  CHECK(h.edge_count() == 3);
  CHECK(h.has_edge(3, 2));
  CHECK(h.has_edge(1, 0));
  CHECK_THROWS_AS(g.permuted({0, 1}), DomainError);
}
