#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "abcgg/families.hpp"
#include "abcgg/index.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace abcgg;
using doctest::Approx;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("edge splits on small graphs") {
  auto c5 = cycle_graph(5);
  for (const auto& [u, v] : c5.edges()) {
    auto s = edge_split(c5, u, v);
    CHECK(s.n_u == 2);
    CHECK(s.n_v == 2);
    CHECK(s.eq == 1);  // the opposite vertex of an odd cycle
  }

  auto p3 = path_graph(3);
  auto s = edge_split(p3, 0, 1);
  CHECK(s.n_u == 1);
  CHECK(s.n_v == 2);
  CHECK(s.eq == 0);

  // b1(3,7): the edge from the shared vertex into the triangle splits
  // (p+2q-3)/2 = 7 against (p-1)/2 = 1 with one equidistant vertex
  auto g = b1(3, 7);
  auto hub = edge_split(g, 0, 1);
  CHECK(hub.n_u == 7);
  CHECK(hub.n_v == 1);
  CHECK(hub.eq == 1);
}

TEST_CASE("edge split errors") {
  auto p3 = path_graph(3);
  CHECK_THROWS_AS(edge_split(p3, 0, 2), DomainError);
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(edge_split(split, 0, 1), DomainError);
}

TEST_CASE("edge split swap symmetry") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + int(rng() % 7), 0.45);
    for (const auto& [u, v] : g.edges()) {
      auto a = edge_split(g, u, v);
      auto b = edge_split(g, v, u);
      CHECK(a.n_u == b.n_v);
      CHECK(a.n_v == b.n_u);
      CHECK(a.eq == b.eq);
      CHECK(edge_contribution(a) == edge_contribution(b));
      CHECK(a.n_u + a.n_v + a.eq == g.order());
      CHECK(a.n_u >= 1);
      CHECK(a.n_v >= 1);
    }
  }
}

TEST_CASE("edge contribution values") {
  CHECK(edge_contribution({{0, 1}, 1, 1, 0}) == 0.0);
  CHECK(edge_contribution({{0, 1}, 2, 2, 0}) == Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(edge_contribution({{0, 1}, 7, 1, 1}) == Approx(std::sqrt(6.0 / 7.0)).epsilon(1e-12));
}

TEST_CASE("index on elementary graphs") {
  CHECK(abc_gg(complete_graph(4)).total == 0.0);
  CHECK(abc_gg(cycle_graph(4)).total == Approx(2.8284271247461903).epsilon(1e-12));

  for (int n = 2; n <= 10; ++n)
    CHECK(abc_gg(complete_graph(n)).total == 0.0);

  for (int n = 3; n <= 14; ++n)
    CHECK(abc_gg(cycle_graph(n)).total == Approx(oracle::cycle_value(n)).epsilon(1e-12));

  for (int n = 2; n <= 14; ++n)
    CHECK(abc_gg(path_graph(n)).total == Approx(oracle::path_value(n)).epsilon(1e-12));

  for (int p = 1; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) {
      if (p == 1 && q == 1) continue;
      CHECK(abc_gg(complete_bipartite(p, q)).total ==
            Approx(oracle::complete_bipartite_value(p, q)).epsilon(1e-12));
    }
}

TEST_CASE("index values on family graphs") {
  CHECK(abc_gg(b1(3, 8)).total == Approx(6.489630846903976).epsilon(1e-12));
  CHECK(abc_gg(b1(3, 7)).total == Approx(6.313040058413825).epsilon(1e-12));
  CHECK(abc_gg(b1(4, 6)).total == Approx(6.570084511520131).epsilon(1e-12));
}

TEST_CASE("report structure") {
  auto g = b1(3, 8);
  auto rep = abc_gg(g);
  CHECK(rep.per_edge.size() == 11);
  double sum = 0.0;
  for (std::size_t i = 0; i < rep.per_edge.size(); ++i) {
    CHECK(rep.per_edge[i].split.edge == g.edges()[i]);  // sorted edge order
    sum += rep.per_edge[i].contribution;
  }
  CHECK(rep.total == Approx(sum).epsilon(1e-15));
  CHECK(rep.total >= 0.0);
}

TEST_CASE("rejects disconnected graphs") {
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(abc_gg(split), DomainError);
  CHECK_THROWS_AS(abc_gg_value(split), DomainError);
}

TEST_CASE("bipartite graphs have no equidistant vertices") {
  auto check_eq_zero = [](const Graph& g) {
    for (const auto& t : abc_gg(g).per_edge) CHECK(t.split.eq == 0);
  };
  for (int n = 4; n <= 20; n += 2) check_eq_zero(cycle_graph(n));
  for (int n = 2; n <= 20; ++n) check_eq_zero(path_graph(n));
  for (int p = 1; p <= 10; ++p)
    for (int q = p; q <= 10; ++q) {
      if (p + q > 20 || (p == 1 && q == 1)) continue;
      check_eq_zero(complete_bipartite(p, q));
    }
}

TEST_CASE("relabeling invariance") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + int(rng() % 8), 0.4);
    auto perm = oracle::random_permutation(rng, g.order());
    CHECK(abc_gg(g).total == Approx(abc_gg(g.permuted(perm)).total).epsilon(1e-12));
  }
}

TEST_CASE("per-edge BFS and all-pairs routes give identical splits") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + int(rng() % 8), 0.4);
    auto rep = abc_gg(g);
    for (const auto& t : rep.per_edge) {
      auto s = edge_split(g, t.split.edge.first, t.split.edge.second);
      CHECK(s.n_u == t.split.n_u);
      CHECK(s.n_v == t.split.n_v);
      CHECK(s.eq == t.split.eq);
    }
  }
}

TEST_CASE("agreement with the independent oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + int(rng() % 8), 0.4);
    CHECK(abc_gg_value(g) == Approx(oracle::abcgg_value(g)).epsilon(1e-12));
    CHECK(abc_gg(g).total == Approx(abc_gg_value(g)).epsilon(1e-15));
  }
  CHECK(std::abs(abc_gg_value(b2(4, 1, 4)) - oracle::abcgg_value(b2(4, 1, 4))) < kTol);
  CHECK(abc_gg_value(b2(4, 1, 4)) == Approx(6.269226685188176).epsilon(1e-12));
}
