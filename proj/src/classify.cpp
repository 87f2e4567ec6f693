#include "coxstab/classify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coxstab {

ExpectedOutcome expected_verdict(const CoxeterGraph& s_graph, VertexSet x) {
  const Recognition s_rec = recognize(s_graph);
  if (!s_rec.spherical || s_rec.components.size() != 1) {
    throw BadSubsetError("ambient graph must be connected spherical");
  }
  const VertexSet full = full_set(s_graph.rank());
  if (x == 0 || x == full || (x & ~full) != 0) {
    throw BadSubsetError("X must be a nonempty proper subset");
  }
  const SphericalType st = s_rec.components[0].type;
  const Recognition x_rec = recognize_within(s_graph, x);

  if (x_rec.components.size() == 1) {
    const SphericalType xt = x_rec.components[0].type;
    const bool ambient_e = st.family == Family::E;
    if (xt.family == Family::D && xt.rank == 5 && ambient_e) {
      return {false, "1a"};
    }
    if (xt.family == Family::D && xt.rank == 7 && ambient_e && st.rank == 8) {
      return {false, "1b"};
    }
    if (xt.family == Family::E && xt.rank == 7 && ambient_e && st.rank == 8) {
      return {false, "1c"};
    }
    if (xt.family == Family::D && xt.rank % 2 == 0) {
      return {false, "1d"};
    }
    if (xt.family == Family::H && xt.rank == 3 && st.family == Family::H &&
        st.rank == 4) {
      return {false, "1e"};
    }
    return {true, ""};
  }

  // Reducible X: unstable except inside F4, or the B_n pattern
  // X = {s1} u Z with Z inside {s3..s_n} irreducible.
  if (st.family == Family::F) return {true, "2b"};
  if (st.family == Family::B && x_rec.components.size() == 2) {
    const int s1 = s_rec.components[0].canon_to_vertex[0];
    for (const auto& comp : x_rec.components) {
      if (comp.support() == set_with(VertexSet{0}, s1)) {
        // The 4-bond forces s2 out of X, so the other component lies in
        // {s3..s_n} automatically.
        return {true, "2a"};
      }
    }
  }
  return {false, "reducible"};
}

std::vector<ReducedPair> reducible_reduction(const CoxeterGraph& s_graph,
                                             VertexSet x) {
  std::vector<ReducedPair> out;
  for (VertexSet comp : s_graph.connected_components()) {
    ReducedPair p;
    p.component = s_graph.induced(comp);
    VertexSet xi = 0;
    for (int v : set_elements(x & comp)) {
      xi = set_with(xi, p.component.vertex_index(s_graph.vertex_name(v)));
    }
    p.x = xi;
    out.push_back(std::move(p));
  }
  return out;
}

bool expected_verdict_any(const CoxeterGraph& s_graph, VertexSet x) {
  for (const auto& p : reducible_reduction(s_graph, x)) {
    if (p.x == 0 || p.x == full_set(p.component.rank())) continue;
    if (!expected_verdict(p.component, p.x).stable) return false;
  }
  return true;
}

std::vector<SphericalType> catalog_types(int max_rank, int i2_max) {
  std::vector<SphericalType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n, 0});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n, 0});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n, 0});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) {
    out.push_back({Family::E, n, 0});
  }
  if (max_rank >= 4) out.push_back({Family::F, 4, 0});
  for (int n = 3; n <= std::min(max_rank, 4); ++n) {
    out.push_back({Family::H, n, 0});
  }
  if (max_rank >= 2) {
    for (int m = 5; m <= i2_max; ++m) out.push_back({Family::I2, 2, m});
  }
  return out;
}

SweepResult sweep(int max_rank, int i2_max, Strategy strategy,
                  std::uint64_t cap, bool timing) {
  SweepResult result;
  result.strategy = strategy;
  for (const SphericalType& t : catalog_types(max_rank, i2_max)) {
    const CoxeterGraph g = CoxeterGraph::from_name(t.name());
    StarContext ctx(g);
    const VertexSet full = full_set(g.rank());
    std::vector<VertexSet> subsets;
    for (VertexSet x = 1; x < full; ++x) subsets.push_back(x);
    std::sort(subsets.begin(), subsets.end(), subset_lex_less);
    for (VertexSet x : subsets) {
      SweepRow row;
      row.type = t.name();
      row.x_names = g.subset_names(x);
      row.x_component_types = recognize_within(g, x).type_name();
      const ExpectedOutcome exp = expected_verdict(g, x);
      row.expected = exp.stable;
      row.rule = exp.rule;
      const auto start = std::chrono::steady_clock::now();
      try {
        const StarVerdict v = decide_star(ctx, x, strategy, cap);
        row.decided = v.holds;
        row.conditional = v.conditional;
      } catch (const CapExceededError&) {
        row.skipped = true;
        ++result.skipped;
      }
      if (timing) {
        row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      }
      if (!row.skipped && row.decided != row.expected) {
        ++result.disagreements;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out;
}

}  // namespace

std::string sweep_to_tsv(const SweepResult& r) {
  std::ostringstream os;
  os << "type\tX\tX_component_types\tdecided\texpected\trule_fired\t"
        "strategy\ttime_ms\n";
  for (const auto& row : r.rows) {
    os << row.type << '\t' << join_names(row.x_names) << '\t'
       << row.x_component_types << '\t';
    if (row.skipped) {
      os << "skipped";
    } else {
      os << (row.decided ? "stable" : "unstable");
      if (row.conditional) os << "(conditional)";
    }
    os << '\t' << (row.expected ? "stable" : "unstable") << '\t'
       << (row.rule.empty() ? "none" : row.rule) << '\t'
       << strategy_name(r.strategy) << '\t' << row.time_ms << '\n';
  }
  return os.str();
}

std::string sweep_to_json(const SweepResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"type", row.type},
                    {"X", row.x_names},
                    {"X_component_types", row.x_component_types},
                    {"decided", row.skipped
                                    ? nlohmann::json(nullptr)
                                    : nlohmann::json(row.decided)},
                    {"expected", row.expected},
                    {"conditional", row.conditional},
                    {"skipped", row.skipped},
                    {"rule_fired", row.rule},
                    {"strategy", strategy_name(r.strategy)},
                    {"time_ms", row.time_ms}});
  }
  nlohmann::json j;
  j["rows"] = std::move(rows);
  j["disagreements"] = r.disagreements;
  j["skipped"] = r.skipped;
  j["all_agree"] = r.all_agree();
  return j.dump(2);
}

}  // namespace coxstab
