#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "abcgg/certificate.hpp"
#include "abcgg/families.hpp"
#include "abcgg/graph.hpp"
#include "abcgg/index.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace abcgg;

TEST_CASE("elementary constructions") {
  CHECK(cycle_graph(4).edge_count() == 4);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  auto p1 = path_graph(1);
  CHECK(p1.order() == 1);
  CHECK(p1.edge_count() == 0);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  CHECK_THROWS_AS(path_graph(0), DomainError);
  CHECK_THROWS_AS(complete_bipartite(0, 3), DomainError);
}

TEST_CASE("b1") {
  auto bowtie = b1(3, 3);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.edge_count() == 6);
  CHECK(bowtie.degree_sequence() == std::vector<int>{4, 2, 2, 2, 2});
  CHECK(bowtie.degree(0) == 4);  // shared vertex is label 0

  auto g = b1(3, 7);
  CHECK(g.order() == 9);
  CHECK(classify_bicyclic(g) == BicyclicClass::kNoPendant);

  CHECK_THROWS_AS(b1(2, 5), DomainError);
  CHECK_THROWS_AS(b1(3, 2), DomainError);
}

TEST_CASE("b2") {
  auto dumbbell = b2(3, 1, 3);
  CHECK(dumbbell.order() == 6);
  CHECK(dumbbell.degree_sequence() == std::vector<int>{3, 3, 2, 2, 2, 2});

  auto g = b2(3, 2, 3);
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 8);
  CHECK(classify_bicyclic(g) == BicyclicClass::kNoPendant);

  CHECK_THROWS_AS(b2(3, 0, 3), DomainError);
  CHECK_THROWS_AS(b2(2, 1, 3), DomainError);
}

TEST_CASE("b3") {
  auto k23 = b3(4, 2, 4);  // theta(2,2,2)
  CHECK(k23.order() == 5);
  CHECK(canonical_certificate(k23) == canonical_certificate(complete_bipartite(2, 3)));

  auto conj = b3(4, 2, 8);  // theta(2,2,6)
  CHECK(conj.order() == 9);
  CHECK(conj.edge_count() == 10);
  CHECK(classify_bicyclic(conj) == BicyclicClass::kNoPendant);
  CHECK(conj.degree(0) == 3);
  CHECK(conj.degree(1) == 3);

  // theta(1,2,3) is the 5-cycle with a chord
  auto chord = b3(3, 1, 4);
  std::vector<Edge> c5_chord{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
  CHECK(canonical_certificate(chord) == canonical_certificate(Graph(5, c5_chord)));

  CHECK_THROWS_AS(b3(5, 5, 4), DomainError);  // l >= q
  CHECK_THROWS_AS(b3(3, 3, 4), DomainError);  // l >= p
  CHECK_THROWS_WITH_AS(b3(3, 2, 3), "b3: two unit paths create a multi-edge",
                       DomainError);
  CHECK_THROWS_AS(b3(2, 1, 4), DomainError);
}

TEST_CASE("b3 symmetry properties") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    int l = 1 + int(rng() % 4);
    int p = l + 1 + int(rng() % 5);
    int q = l + 1 + int(rng() % 5);
    if (p < 3 || q < 3) continue;
    int unit = (l == 1) + (p - l == 1) + (q - l == 1);
    if (unit > 1) continue;
    if (p + q - l - 1 > 16) continue;
    CHECK(canonical_certificate(b3(p, l, q)) == canonical_certificate(b3(q, l, p)));
    CHECK(b3(p, l, q).order() == p + q - l - 1);
    CHECK(classify_bicyclic(b3(p, l, q)) == BicyclicClass::kNoPendant);
  }

  // the path-length multiset {l, p-l, q-l} determines the class
  auto cert_245 = canonical_certificate(b3(6, 2, 7));  // {2,4,5}
  CHECK(cert_245 == canonical_certificate(b3(6, 4, 9)));   // {4,2,5}
  CHECK(cert_245 == canonical_certificate(b3(7, 5, 9)));   // {5,2,4}
  CHECK(cert_245 != canonical_certificate(b3(5, 2, 8)));   // {2,3,6}, same order
}

TEST_CASE("h graph") {
  CHECK_THROWS_AS(h_graph(4), DomainError);
  auto h5 = h_graph(5);
  CHECK(h5.order() == 5);
  CHECK(h5.edge_count() == 6);
  CHECK(h5.degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});

  for (int n = 5; n <= 12; ++n) {
    auto h = h_graph(n);
    CHECK(h.edge_count() == n + 1);
    int pendants = 0;
    for (int v = 0; v < n; ++v) pendants += h.degree(v) == 1;
    CHECK(pendants == n - 4);
    CHECK(classify_bicyclic(h) == BicyclicClass::kWithPendant);
  }
}

TEST_CASE("family order formulas and classification") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 3 + int(rng() % 6);
    int q = 3 + int(rng() % 6);
    int l = 1 + int(rng() % 4);
    auto g1 = b1(p, q);
    CHECK(g1.order() == p + q - 1);
    CHECK(g1.edge_count() == g1.order() + 1);
    CHECK(classify_bicyclic(g1) == BicyclicClass::kNoPendant);
    auto g2 = b2(p, l, q);
    CHECK(g2.order() == p + q + l - 1);
    CHECK(classify_bicyclic(g2) == BicyclicClass::kNoPendant);
  }
}

TEST_CASE("descriptor parsing") {
  auto fp = parse_family("b1:3,7");
  CHECK(fp.kind == FamilyKind::kB1);
  CHECK(fp.p == 3);
  CHECK(fp.q == 7);
  CHECK(fp.order() == 9);
  CHECK(fp.descriptor() == "b1:3,7");

  auto b3p = parse_family("b3:4,2,8");
  CHECK(b3p.kind == FamilyKind::kB3);
  CHECK(b3p.p == 4);
  CHECK(b3p.l == 2);
  CHECK(b3p.q == 8);
  CHECK(b3p.order() == 9);
  CHECK(b3p.build().order() == 9);

  CHECK(parse_family("h:8").build().edge_count() == 9);
  CHECK(parse_family("cycle:5").build().edge_count() == 5);
  CHECK(parse_family("path:4").build().edge_count() == 3);
  CHECK(parse_family("complete:4").build().edge_count() == 6);
  CHECK(parse_family("kpq:2,3").build().edge_count() == 6);

  CHECK_THROWS_AS(parse_family("b1:3"), DomainError);
  CHECK_THROWS_AS(parse_family("b9:3,3"), DomainError);
  CHECK_THROWS_AS(parse_family("b1"), DomainError);
  CHECK_THROWS_AS(parse_family("b1:3,x"), DomainError);
  CHECK_THROWS_AS(parse_family("b3:5,5,4").build(), DomainError);
}
