#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxstab/checks.hpp"
#include "coxstab/star.hpp"

using namespace coxstab;

TEST_CASE("reference tables all pass") {
  const auto checks = verify_tables();
  CHECK(checks.size() == 39);
  for (const auto& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.details);
    CHECK(c.pass);
  }
}

TEST_CASE("negative control: perturbed numbering breaks the E6 table") {
  // Swap the roles of s1 and s2 in the E6 graph.
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const int n = 6;
  std::vector<int> perm = {1, 0, 2, 3, 4, 5};
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[perm[i]][perm[j]] = e6.bond(i, j);
  }
  const CoxeterGraph perturbed =
      CoxeterGraph::from_matrix(m, e6.vertex_names());
  const CheckResult res =
      check_table1_type(perturbed, SphericalType{Family::E, 6, 0});
  CHECK_FALSE(res.pass);
  // The honest graph passes the identical check.
  CHECK(check_table1_type(e6, SphericalType{Family::E, 6, 0}).pass);
}

TEST_CASE("counterexample checks pass") {
  for (const auto& c : all_counterexample_checks()) {
    CAPTURE(c.id);
    CAPTURE(c.details);
    CHECK(c.pass);
  }
}

TEST_CASE("counterexample dispatcher and parameters") {
  CHECK(verify_counterexample("a", "E6").pass);
  CHECK(verify_counterexample("d", "2").pass);
  CHECK(verify_counterexample("e").pass);
  CHECK_THROWS_AS(verify_counterexample("a", "B4"), BadParamsError);
  CHECK_THROWS_AS(verify_counterexample("d", "x"), BadParamsError);
  CHECK_THROWS_AS(verify_counterexample("z"), BadParamsError);
}

TEST_CASE("counterexample (a) passes for every embedding") {
  for (const char* ambient : {"E6", "E7"}) {
    const auto checks = counterexample_a_placements(ambient);
    CHECK(checks.size() == 4);
    for (const auto& c : checks) {
      CAPTURE(c.id);
      CAPTURE(c.details);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("non-conjugacy certificates match the star decider") {
  // Sub-check (ii) of each counterexample corresponds to a failing pair.
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  CHECK_FALSE(
      decide_star(e6, e6.parse_subset({"s2", "s3", "s4", "s5", "s6"})).holds);
  const CoxeterGraph e8 = CoxeterGraph::from_name("E8");
  CHECK_FALSE(decide_star(
                  e8, e8.parse_subset({"s1", "s2", "s3", "s4", "s5", "s6",
                                       "s7"}))
                  .holds);
  const CoxeterGraph d5 = CoxeterGraph::from_name("D5");
  CHECK_FALSE(
      decide_star(d5, d5.parse_subset({"s1", "s2", "s3", "s4"})).holds);
  const CoxeterGraph h4 = CoxeterGraph::from_name("H4");
  CHECK_FALSE(decide_star(h4, h4.parse_subset({"s1", "s2", "s3"})).holds);
}

TEST_CASE("odd-bond lemma checks") {
  const CheckResult b3 =
      verify_odd_lemma(CoxeterGraph::from_name("B3"), 10000);
  CHECK(b3.pass);  // classes {s1}, {s2,s3}
  CHECK(verify_odd_lemma(CoxeterGraph::from_name("A4"), 10000).pass);
  // I2(4) = B2: even bond, classes {s1}, {s2}.
  const CoxeterGraph b2 = CoxeterGraph::from_name("B2");
  CHECK(verify_odd_lemma(b2, 10000).pass);
  CHECK_FALSE(odd_connected(b2, 0, 1));
  CHECK_THROWS_AS(verify_odd_lemma(CoxeterGraph::from_name("B4"), 10),
                  CapExceededError);
}

TEST_CASE("report formats") {
  std::vector<CheckResult> checks = {{"demo.pass", true, ""},
                                     {"demo.fail", false, "boom"}};
  const std::string xml = checks_to_junit_xml(checks);
  CHECK(xml.find("<testsuite name=\"reference-checks\" tests=\"2\" "
                 "failures=\"1\">") != std::string::npos);
  CHECK(xml.find("<testcase name=\"demo.pass\"") != std::string::npos);
  CHECK(xml.find("<failure message=\"boom\"/>") != std::string::npos);
  const std::string json = checks_to_json(checks);
  CHECK(json.find("\"failures\": 1") != std::string::npos);
}
