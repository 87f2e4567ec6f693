#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxstab/ribbons.hpp"

using namespace coxstab;

namespace {

SubsetMap map_of(const CoxeterGraph& g,
                 std::initializer_list<std::pair<const char*, const char*>>
                     pairs) {
  SubsetMap m;
  for (const auto& [a, b] : pairs) {
    m.entries.emplace_back(g.vertex_index(a), g.vertex_index(b));
  }
  std::sort(m.entries.begin(), m.entries.end());
  return m;
}

}  // namespace

TEST_CASE("w0_map examples") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const RootSystem rs(e6);
  const VertexSet full = full_set(6);

  const SubsetMap flip = w0_map(rs, full, full);
  CHECK(flip == map_of(e6, {{"s1", "s6"},
                            {"s2", "s2"},
                            {"s3", "s5"},
                            {"s4", "s4"},
                            {"s5", "s3"},
                            {"s6", "s1"}}));

  // w0(D4) is central: identity on {s2,s3,s4,s5}.
  const VertexSet d4 = e6.parse_subset({"s2", "s3", "s4", "s5"});
  CHECK(w0_map(rs, d4, d4).is_identity());

  // Singleton.
  const VertexSet t = e6.parse_subset({"s3"});
  CHECK(w0_map(rs, t, t).is_identity());

  CHECK_THROWS_AS(w0_map(rs, t, d4), NotContainedError);
}

TEST_CASE("ribbon_map examples") {
  const CoxeterGraph a3 = CoxeterGraph::from_name("A3");
  const RootSystem rs(a3);
  const RibbonStep step =
      ribbon_map(rs, a3.vertex_index("s3"), a3.parse_subset({"s1", "s2"}));
  CHECK(step.map == map_of(a3, {{"s1", "s2"}, {"s2", "s3"}}));
  CHECK(step.map.target() == a3.parse_subset({"s2", "s3"}));
  CHECK(step.adjacent);

  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const RootSystem rse(e6);
  const RibbonStep e6step = ribbon_map(
      rse, e6.vertex_index("s1"), e6.parse_subset({"s2", "s3", "s4"}));
  CHECK(e6step.map.target() == e6.parse_subset({"s1", "s3", "s4"}));

  // Non-adjacent letter: identity with unchanged target.
  const CoxeterGraph b3 = CoxeterGraph::from_name("B3");
  const RootSystem rsb(b3);
  const RibbonStep nonadj =
      ribbon_map(rsb, b3.vertex_index("s3"), b3.parse_subset({"s1"}));
  CHECK(nonadj.map.is_identity());
  CHECK(nonadj.map.target() == b3.parse_subset({"s1"}));
  CHECK_FALSE(nonadj.adjacent);

  CHECK_THROWS_AS(
      ribbon_map(rsb, b3.vertex_index("s1"), b3.parse_subset({"s1"})),
      VertexInSubsetError);
}

TEST_CASE("non-adjacent ribbons are always the identity") {
  for (const auto& name : {"A4", "B4", "D5", "H4"}) {
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const RootSystem rs(g);
    const VertexSet full = full_set(g.rank());
    for (VertexSet z = 1; z < full; ++z) {
      for (int t = 0; t < g.rank(); ++t) {
        if (set_contains(z, t) || g.adjacent_to_set(t, z)) continue;
        const RibbonStep step = ribbon_map(rs, t, z);
        CHECK(step.map.is_identity());
        CHECK(step.map.target() == z);
      }
    }
  }
}

TEST_CASE("reachability: D5 subgraph keeps the fork support fixed") {
  // Gamma_X of type D5 inside E6; Y = {x1,x2,x3} = {s2,s3,s4}.
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const CoxeterGraph gx =
      e6.induced(e6.parse_subset({"s2", "s3", "s4", "s5", "s6"}));
  const VertexSet y = gx.parse_subset({"s2", "s3", "s4"});
  const ReachResult res = reachable_maps(gx, y, /*adjacent_only=*/true);
  CHECK(res.target_subsets() == std::set<VertexSet>{y});
}

TEST_CASE("reachability in full E6 reaches the shifted support") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const VertexSet y = e6.parse_subset({"s2", "s3", "s4"});
  const ReachResult res = reachable_maps(e6, y, false);
  CHECK(res.target_subsets().count(e6.parse_subset({"s3", "s4", "s5"})) == 1);
}

TEST_CASE("reachability: E7 two-node picture") {
  const CoxeterGraph e7 = CoxeterGraph::from_name("E7");
  const VertexSet y = e7.parse_subset({"s1", "s3", "s4", "s5", "s6"});
  const VertexSet y2 = e7.parse_subset({"s3", "s4", "s5", "s6", "s7"});
  const VertexSet z = e7.parse_subset({"s2", "s4", "s5", "s6", "s7"});
  const ReachResult res = reachable_maps(e7, y, /*adjacent_only=*/true);
  CHECK(res.target_subsets() == std::set<VertexSet>{y, y2});
  CHECK(res.target_subsets().count(z) == 0);
}

TEST_CASE("reachability from the empty set") {
  const CoxeterGraph a2 = CoxeterGraph::from_name("A2");
  const ReachResult res = reachable_maps(a2, 0, false);
  CHECK(res.states.size() == 1);
  CHECK(res.states[0].map.entries.empty());
}

TEST_CASE("apply_chain replays the five-move H4 chain") {
  const CoxeterGraph h4 = CoxeterGraph::from_name("H4");
  const RootSystem rs(h4);
  const VertexSet y = h4.parse_subset({"s1", "s3"});
  const std::vector<Move> moves = {
      Move::ribbon(h4.vertex_index("s4"), y),
      Move::ribbon(h4.vertex_index("s2"), h4.parse_subset({"s1", "s4"})),
      Move::w0conj(h4.parse_subset({"s2", "s3", "s4"})),
      Move::ribbon(h4.vertex_index("s1"), h4.parse_subset({"s2", "s4"})),
      Move::ribbon(h4.vertex_index("s3"), h4.parse_subset({"s1", "s4"}))};
  const RibbonChain chain = apply_chain(rs, y, moves);
  CHECK(chain.composite == map_of(h4, {{"s1", "s3"}, {"s3", "s1"}}));

  // Empty chain.
  CHECK(apply_chain(rs, y, {}).composite == SubsetMap::identity_on(y));

  // Mismatched base reports the failing index.
  try {
    apply_chain(rs, y, {Move::ribbon(h4.vertex_index("s4"), y),
                        Move::ribbon(h4.vertex_index("s2"), y)});
    FAIL("expected ChainMismatchError");
  } catch (const ChainMismatchError& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("apply_chain maps positive words letterwise") {
  const CoxeterGraph e6 = CoxeterGraph::from_name("E6");
  const RootSystem rs(e6);
  const VertexSet y = e6.parse_subset({"s2", "s3", "s4"});
  const std::vector<Move> moves = {
      Move::ribbon(e6.vertex_index("s1"), y),
      Move::ribbon(e6.vertex_index("s5"),
                   e6.parse_subset({"s1", "s3", "s4"}))};
  const RibbonChain chain = apply_chain(rs, y, moves);
  CHECK(chain.composite.target() == e6.parse_subset({"s3", "s4", "s5"}));
  const Word g_word = word_from_names(e6, {"s2", "s4", "s3"});
  const Word h_word = word_from_names(e6, {"s5", "s4", "s3"});
  CHECK(chain.composite.map_word(g_word) == h_word);
}

TEST_CASE("every reachable map is realized by its witness chain") {
  for (const auto& name : {"A3", "B3", "H3", "I2(5)", "A4"}) {
    CAPTURE(name);
    const CoxeterGraph g = CoxeterGraph::from_name(name);
    const RootSystem rs(g);
    RibbonCalc calc(rs);
    const VertexSet full = full_set(g.rank());
    for (VertexSet y = 1; y <= full; ++y) {
      const ReachResult res = reachable_maps(calc, y, false);
      for (std::size_t i = 0; i < res.states.size(); ++i) {
        const auto chain = res.chain_to(i);
        const GroupElement wel = chain_element(rs, y, chain);
        for (const auto& [a, b] : res.states[i].map.entries) {
          CHECK(simple_conjugate(wel, a) == b);
        }
        // And replaying the chain gives back the state's map.
        CHECK(apply_chain(rs, y, chain).composite == res.states[i].map);
      }
    }
  }
}

TEST_CASE("reachability is closed under further moves") {
  const CoxeterGraph g = CoxeterGraph::from_name("B4");
  const RootSystem rs(g);
  RibbonCalc calc(rs);
  const VertexSet y = g.parse_subset({"s1", "s3"});
  const ReachResult res = reachable_maps(calc, y, false);
  const auto maps = res.maps();
  for (const auto& st : res.states) {
    const VertexSet cur = st.map.target();
    for (int t = 0; t < g.rank(); ++t) {
      if (set_contains(cur, t)) continue;
      CHECK(maps.count(st.map.then(calc.ribbon(t, cur))) == 1);
    }
    for (const auto& [zz, step] : calc.w0conj_moves(cur)) {
      CHECK(maps.count(st.map.then(step)) == 1);
    }
  }
}

TEST_CASE("reachability is deterministic across runs") {
  const CoxeterGraph g = CoxeterGraph::from_name("D5");
  const VertexSet y = g.parse_subset({"s1", "s3", "s4"});
  const ReachResult r1 = reachable_maps(g, y, false);
  const ReachResult r2 = reachable_maps(g, y, false);
  REQUIRE(r1.states.size() == r2.states.size());
  for (std::size_t i = 0; i < r1.states.size(); ++i) {
    CHECK(r1.states[i].map == r2.states[i].map);
    CHECK(r1.chain_to(i) == r2.chain_to(i));
  }
}

TEST_CASE("chain JSON round trip") {
  const CoxeterGraph h4 = CoxeterGraph::from_name("H4");
  const std::vector<Move> moves = {
      Move::ribbon(h4.vertex_index("s4"), h4.parse_subset({"s1", "s3"})),
      Move::w0conj(h4.parse_subset({"s2", "s3", "s4"}))};
  const std::string text = chain_to_json(h4, moves);
  CHECK(text ==
        R"([{"ribbon":["s4",["s1","s3"]]},{"w0conj":["s2","s3","s4"]}])");
  CHECK(chain_from_json(h4, text) == moves);
}
