#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxstab/classify.hpp"

using namespace coxstab;

TEST_CASE("expected_verdict rule table") {
  const CoxeterGraph e8 = CoxeterGraph::from_name("E8");
  // D7 inside E8.
  const auto d7 = expected_verdict(
      e8, e8.parse_subset({"s2", "s3", "s4", "s5", "s6", "s7", "s8"}));
  CHECK_FALSE(d7.stable);
  CHECK(d7.rule == "1b");
  // E7 inside E8.
  const auto e7 = expected_verdict(
      e8, e8.parse_subset({"s1", "s2", "s3", "s4", "s5", "s6", "s7"}));
  CHECK_FALSE(e7.stable);
  CHECK(e7.rule == "1c");

  const CoxeterGraph f4 = CoxeterGraph::from_name("F4");
  const auto f4red = expected_verdict(f4, f4.parse_subset({"s1", "s3"}));
  CHECK(f4red.stable);
  CHECK(f4red.rule == "2b");

  const CoxeterGraph d6 = CoxeterGraph::from_name("D6");
  const auto d4 = expected_verdict(
      d6, d6.parse_subset({"s1", "s2", "s3", "s4"}));
  CHECK_FALSE(d4.stable);
  CHECK(d4.rule == "1d");

  const CoxeterGraph b5 = CoxeterGraph::from_name("B5");
  const auto bpat = expected_verdict(b5, b5.parse_subset({"s1", "s3", "s4"}));
  CHECK(bpat.stable);
  CHECK(bpat.rule == "2a");
  // Same shape but the tail component is reducible: no exception.
  const auto bbad = expected_verdict(b5, b5.parse_subset({"s1", "s3", "s5"}));
  CHECK_FALSE(bbad.stable);
  CHECK(bbad.rule == "reducible");

  const CoxeterGraph h4 = CoxeterGraph::from_name("H4");
  CHECK(expected_verdict(h4, h4.parse_subset({"s1", "s2", "s3"})).rule ==
        "1e");
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  CHECK(expected_verdict(
            e6, e6.parse_subset({"s2", "s3", "s4", "s5", "s6"})).rule == "1a");

  // D5 inside D6 is fine (rule 1a needs an E ambient).
  const auto d5ind6 = expected_verdict(
      d6, d6.parse_subset({"s1", "s2", "s3", "s4", "s5"}));
  CHECK(d5ind6.stable);

  CHECK_THROWS_AS(expected_verdict(e8, 0), BadSubsetError);
  CHECK_THROWS_AS(expected_verdict(e8, full_set(8)), BadSubsetError);
}

TEST_CASE("expected_verdict is invariant under graph automorphisms") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const auto placements = find_placements(e6, SphericalType{Family::D, 5, 0});
  REQUIRE(placements.size() == 4);
  for (const auto& p : placements) {
    CHECK_FALSE(expected_verdict(e6, p.subset).stable);
  }
  // Same with the two A5 placements.
  for (const auto& p : find_placements(e6, SphericalType{Family::A, 5, 0})) {
    CHECK(expected_verdict(e6, p.subset).stable);
  }
}

TEST_CASE("reducible_reduction") {
  std::vector<std::vector<int>> m(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  m[0][1] = m[1][0] = 3;  // A2 on {a1,a2}
  m[2][3] = m[3][2] = 4;  // B2 on {b1,b2}
  const CoxeterGraph g =
      CoxeterGraph::from_matrix(m, {"a1", "a2", "b1", "b2"});
  const auto pairs = reducible_reduction(g, g.parse_subset({"a1", "b1"}));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].component.rank() == 2);
  CHECK(pairs[0].component.bond(0, 1) == 3);
  CHECK(pairs[0].x == 1);
  CHECK(pairs[1].component.bond(0, 1) == 4);
  CHECK(pairs[1].x == 1);

  // Connected ambient: a single pair.
  const CoxeterGraph a3 = CoxeterGraph::from_name("A3");
  CHECK(reducible_reduction(a3, a3.parse_subset({"s2"})).size() == 1);

  // The composite verdict is the conjunction over proper components;
  // empty or full restrictions contribute true.
  CHECK(expected_verdict_any(g, g.parse_subset({"a1", "b1"})));
  CHECK(expected_verdict_any(g, g.parse_subset({"a1", "a2", "b1"})));
  // {a1,a3}-style failure inside one component: use A3 u A1.
  std::vector<std::vector<int>> m2(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) m2[i][i] = 1;
  m2[0][1] = m2[1][0] = 3;
  m2[1][2] = m2[2][1] = 3;  // A3 on {c1,c2,c3}, A1 on {d1}
  const CoxeterGraph g2 =
      CoxeterGraph::from_matrix(m2, {"c1", "c2", "c3", "d1"});
  CHECK_FALSE(expected_verdict_any(g2, g2.parse_subset({"c1", "c3", "d1"})));

  // Componentwise reduction agrees with the decider on the product group.
  for (VertexSet x = 1; x < full_set(4); ++x) {
    CHECK(decide_star(g, x).holds == expected_verdict_any(g, x));
  }
}

TEST_CASE("catalog_types composition") {
  const auto types = catalog_types(8, 12);
  std::set<std::string> names;
  for (const auto& t : types) names.insert(t.name());
  CHECK(names.count("A1") == 1);
  CHECK(names.count("B2") == 1);
  CHECK(names.count("I2(4)") == 0);  // reported under B2 only
  CHECK(names.count("I2(5)") == 1);
  CHECK(names.count("I2(12)") == 1);
  CHECK(names.count("E8") == 1);
  CHECK(names.count("D4") == 1);
  CHECK(names.count("D3") == 0);
  CHECK(catalog_types(1, 12).size() == 1);  // just A1
}

TEST_CASE("sweep at rank 4 agrees everywhere") {
  const SweepResult r = sweep(4, 8, Strategy::Hybrid, kDefaultCap);
  CHECK(r.all_agree());
  CHECK(r.skipped == 0);
  // A1 contributes no rows.
  for (const auto& row : r.rows) CHECK(row.type != "A1");
  // Rule exclusivity: unstable rows name a rule, stable irreducible rows
  // report none.
  for (const auto& row : r.rows) {
    if (!row.expected) {
      CHECK((row.rule == "1a" || row.rule == "1b" || row.rule == "1c" ||
             row.rule == "1d" || row.rule == "1e" || row.rule == "reducible"));
    }
  }
}

TEST_CASE("F4 has exactly the five reducible proper subsets") {
  const CoxeterGraph f4 = CoxeterGraph::from_name("F4");
  std::set<std::set<std::string>> reducible;
  for (VertexSet x = 1; x < full_set(4); ++x) {
    if (recognize_within(f4, x).components.size() >= 2) {
      const auto names = f4.subset_names(x);
      reducible.insert(std::set<std::string>(names.begin(), names.end()));
    }
  }
  const std::set<std::set<std::string>> expect = {
      {"s1", "s3"},
      {"s1", "s4"},
      {"s2", "s4"},
      {"s1", "s3", "s4"},
      {"s1", "s2", "s4"}};
  CHECK(reducible == expect);
}

TEST_CASE("sweep output formats") {
  const SweepResult r = sweep(3, 5, Strategy::Hybrid, kDefaultCap);
  const std::string tsv = sweep_to_tsv(r);
  CHECK(tsv.find("type\tX\tX_component_types\tdecided\texpected\trule_fired\t"
                 "strategy\ttime_ms") == 0);
  CHECK(tsv.find("A3\ts1,s3\tA1 x A1\tunstable\tunstable\treducible\thybrid") !=
        std::string::npos);
  const std::string json = sweep_to_json(r);
  CHECK(json.find("\"all_agree\": true") != std::string::npos);
  // Determinism without timing.
  CHECK(sweep_to_json(sweep(3, 5, Strategy::Hybrid, kDefaultCap)) == json);
}
