#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxstab/coxgraph.hpp"
#include "oracles.hpp"

using namespace coxstab;

namespace {

std::vector<std::vector<int>> matrix_of(const CoxeterGraph& g) {
  std::vector<std::vector<int>> m(g.rank(), std::vector<int>(g.rank()));
  for (int i = 0; i < g.rank(); ++i) {
    for (int j = 0; j < g.rank(); ++j) m[i][j] = g.bond(i, j);
  }
  return m;
}

}  // namespace

TEST_CASE("from_name builds the pinned catalog graphs") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  CHECK(e6.rank() == 6);
  const auto edge = [&](const char* a, const char* b) {
    return e6.bond(e6.vertex_index(a), e6.vertex_index(b));
  };
  CHECK(edge("s1", "s3") == 3);
  CHECK(edge("s3", "s4") == 3);
  CHECK(edge("s4", "s5") == 3);
  CHECK(edge("s5", "s6") == 3);
  CHECK(edge("s2", "s4") == 3);
  CHECK(edge("s1", "s2") == 2);
  int edges = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (e6.bond(i, j) >= 3) ++edges;
    }
  }
  CHECK(edges == 5);

  const CoxeterGraph b3 = CoxeterGraph::from_name("B3");
  CHECK(b3.bond(0, 1) == 4);
  CHECK(b3.bond(1, 2) == 3);
  CHECK(b3.bond(0, 2) == 2);

  const CoxeterGraph i27 = CoxeterGraph::from_name("I2(7)");
  CHECK(i27.rank() == 2);
  CHECK(i27.bond(0, 1) == 7);

  CHECK_THROWS_AS(CoxeterGraph::from_name("E9"), UnknownTypeError);
  CHECK_THROWS_AS(CoxeterGraph::from_name("D3"), UnknownTypeError);
  CHECK_THROWS_AS(CoxeterGraph::from_name("I2(2)"), UnknownTypeError);
  CHECK_THROWS_AS(CoxeterGraph::from_name("I2(4)"), UnknownTypeError);
  CHECK_THROWS_AS(CoxeterGraph::from_name("A0"), UnknownTypeError);
  CHECK_THROWS_AS(CoxeterGraph::from_name("Q5"), UnknownTypeError);

  // G2 is an accepted alias, canonicalized to I2(6).
  const CoxeterGraph g2 = CoxeterGraph::from_name("G2");
  CHECK(g2.bond(0, 1) == 6);
  CHECK(recognize(g2).components[0].type.name() == "I2(6)");
}

TEST_CASE("from_matrix validates") {
  const CoxeterGraph a2 =
      CoxeterGraph::from_matrix({{1, 3}, {3, 1}}, {"s1", "s2"});
  CHECK(a2 == CoxeterGraph::from_name("A2"));
  CHECK_THROWS_AS(
      CoxeterGraph::from_matrix({{1, 2}, {3, 1}}, {"s1", "s2"}),
      NotSymmetricError);
  CHECK_THROWS_AS(
      CoxeterGraph::from_matrix({{2, 3}, {3, 1}}, {"s1", "s2"}),
      BadDiagonalError);
  CHECK_THROWS_AS(
      CoxeterGraph::from_matrix({{1, 1}, {1, 1}}, {"s1", "s2"}),
      BadEntryError);
}

TEST_CASE("induced subgraphs") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const VertexSet x = e6.parse_subset({"s2", "s3", "s4", "s5"});
  const CoxeterGraph star_graph = e6.induced(x);
  // Star with center s4: recognize as D4 with the center at canonical s3.
  const Recognition rec = recognize(star_graph);
  REQUIRE(rec.spherical);
  REQUIRE(rec.components.size() == 1);
  CHECK(rec.components[0].type.name() == "D4");
  CHECK(star_graph.vertex_name(rec.components[0].canon_to_vertex[2]) == "s4");

  const CoxeterGraph b3 = CoxeterGraph::from_name("B3");
  const CoxeterGraph iso = b3.induced(b3.parse_subset({"s1", "s3"}));
  CHECK(iso.bond(0, 1) == 2);

  CHECK(e6.induced(full_set(6)) == e6);
  CHECK_THROWS_AS(e6.parse_subset({"s7"}), UnknownVertexError);

  // Monotonicity: induced(induced(G,X),Y) == induced(G,Y) for Y inside X.
  const CoxeterGraph gx = e6.induced(e6.parse_subset({"s2", "s3", "s4", "s5"}));
  const CoxeterGraph a = gx.induced(gx.parse_subset({"s2", "s4"}));
  const CoxeterGraph b = e6.induced(e6.parse_subset({"s2", "s4"}));
  CHECK(a == b);
}

TEST_CASE("recognize catalog examples") {
  // Unlabeled 5-vertex path.
  std::vector<std::vector<int>> m(5, std::vector<int>(5, 2));
  for (int i = 0; i < 5; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < 5; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  const CoxeterGraph path =
      CoxeterGraph::from_matrix(m, {"a", "b", "c", "d", "e"});
  const Recognition rec = recognize(path);
  REQUIRE(rec.spherical);
  CHECK(rec.components[0].type.name() == "A5");

  // 3-cycle: no catalog match; cross-checked against the exact
  // positive-definiteness oracle for simply-laced graphs.
  std::vector<std::vector<int>> c3 = {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
  const CoxeterGraph cycle = CoxeterGraph::from_matrix(c3, {"a", "b", "c"});
  CHECK_FALSE(recognize(cycle).spherical);
  CHECK(oracles::simply_laced_positive_definite(cycle) ==
        std::optional<bool>(false));
  CHECK(oracles::simply_laced_positive_definite(path) ==
        std::optional<bool>(true));

  // Infinite bonds are accepted by from_matrix but never spherical.
  const CoxeterGraph inf = CoxeterGraph::from_matrix(
      {{1, kInfiniteBond}, {kInfiniteBond, 1}}, {"a", "b"});
  CHECK_FALSE(recognize(inf).spherical);

  // A 3-vertex path with label 3 is A3, never "D3".
  const CoxeterGraph a3 = CoxeterGraph::from_name("A3");
  CHECK(recognize(a3).components[0].type.name() == "A3");
}

TEST_CASE("catalog round trip with identity relabeling") {
  std::vector<std::string> names;
  for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) names.push_back("B" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) names.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) names.push_back("E" + std::to_string(n));
  names.push_back("F4");
  names.push_back("H3");
  names.push_back("H4");
  for (int m = 5; m <= 12; ++m) {
    names.push_back("I2(" + std::to_string(m) + ")");
  }
  for (const auto& name : names) {
    CAPTURE(name);
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const Recognition rec = recognize(g);
    REQUIRE(rec.spherical);
    REQUIRE(rec.components.size() == 1);
    CHECK(rec.components[0].type.name() == name);
    for (int i = 0; i < g.rank(); ++i) {
      CHECK(rec.components[0].canon_to_vertex[i] == i);
    }
  }
}

TEST_CASE("recognize is invariant under vertex renaming") {
  std::mt19937 rng(20240811);
  for (const auto& name :
       {"A5", "B4", "D6", "E7", "F4", "H4", "I2(9)", "E8"}) {
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const int n = g.rank();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::vector<int>> m(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[perm[i]][perm[j]] = g.bond(i, j);
      }
      const CoxeterGraph h = CoxeterGraph::from_matrix(m, g.vertex_names());
      const Recognition rec = recognize(h);
      REQUIRE(rec.spherical);
      CHECK(rec.components[0].type.name() == name);
    }
  }
}

TEST_CASE("odd connectivity") {
  const CoxeterGraph b3 = CoxeterGraph::from_name("B3");
  CHECK(odd_connected(b3, 1, 2));        // s2 - s3 via bond 3
  CHECK_FALSE(odd_connected(b3, 0, 1));  // bond 4
  const CoxeterGraph a3 = CoxeterGraph::from_name("A3");
  CHECK(odd_connected(a3, 0, 2));  // path through s2
  CHECK_THROWS_AS(odd_connected(a3, 0, 5), UnknownVertexError);

  // Equivalence relation on every graph (random simply-laced + catalog).
  for (const auto& name : {"B4", "F4", "H4", "I2(6)", "I2(7)", "D5"}) {
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const int n = g.rank();
    for (int a = 0; a < n; ++a) {
      CHECK(odd_connected(g, a, a));
      for (int b = 0; b < n; ++b) {
        CHECK(odd_connected(g, a, b) == odd_connected(g, b, a));
        for (int c = 0; c < n; ++c) {
          if (odd_connected(g, a, b) && odd_connected(g, b, c)) {
            CHECK(odd_connected(g, a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("graph JSON round trip") {
  const std::string text =
      R"({"vertices":["s1","s2","s3"],"edges":[["s1","s2",4],["s2","s3"]]})";
  const CoxeterGraph g = graph_from_json(text);
  CHECK(g == CoxeterGraph::from_name("B3"));
  const CoxeterGraph again = graph_from_json(graph_to_json(g));
  CHECK(again == g);

  const CoxeterGraph inf = CoxeterGraph::from_matrix(
      {{1, kInfiniteBond}, {kInfiniteBond, 1}}, {"a", "b"});
  CHECK(graph_from_json(graph_to_json(inf)) == inf);
  CHECK_THROWS(graph_from_json(R"({"vertices":["a"],"edges":[["a","z"]]})"));
}

TEST_CASE("placements and automorphisms") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const auto d5 = find_placements(e6, SphericalType{Family::D, 5, 0});
  CHECK(d5.size() == 4);  // two subsets, two labelings each
  std::set<VertexSet> subsets;
  for (const auto& p : d5) subsets.insert(p.subset);
  CHECK(subsets.size() == 2);

  CHECK(graph_automorphisms(CoxeterGraph::from_name("D4")).size() == 6);
  CHECK(graph_automorphisms(CoxeterGraph::from_name("E6")).size() == 2);
  CHECK(graph_automorphisms(CoxeterGraph::from_name("E7")).size() == 1);
  CHECK(graph_automorphisms(CoxeterGraph::from_name("F4")).size() == 2);
  CHECK(graph_automorphisms(CoxeterGraph::from_name("B3")).size() == 1);
}

TEST_CASE("group orders match the degree-product oracle") {
  for (const auto& name : {"A6", "B5", "D6", "E6", "F4", "H3", "H4", "I2(9)"}) {
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const SphericalType t = recognize(g).components[0].type;
    CHECK(group_order_saturated(g) == oracles::order_from_degrees(t));
  }
}
