#include "coxstab/star.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "coxstab/enumerate.hpp"

namespace coxstab {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Oracle:
      return "oracle";
    case Strategy::Ribbon:
      return "ribbon";
    case Strategy::Hybrid:
      return "hybrid";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (n == "oracle") return Strategy::Oracle;
  if (n == "ribbon") return Strategy::Ribbon;
  if (n == "hybrid") return Strategy::Hybrid;
  throw BadParamsError("unknown strategy: " + name);
}

namespace {

/// Collects the distinct conjugation profiles of a group: for each element w,
/// profile[v] = the vertex t with v^w = t when that conjugate is a simple
/// reflection, -1 otherwise. All per-Y1 realized-map queries reduce to
/// restrictions of these profiles.
std::vector<std::vector<signed char>> collect_profiles(const RootSystem& rs,
                                                       std::uint64_t cap) {
  const int rank = rs.rank();
  std::vector<int> alpha(rank);
  for (int v = 0; v < rank; ++v) alpha[v] = rs.simple_root(v);
  std::vector<signed char> simple_of(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) {
    simple_of[r] = static_cast<signed char>(rs.simple_of_root(r));
  }

  std::vector<std::vector<signed char>> out;
  // The enumeration ranges over the whole group, so taking images under each
  // streamed element (rather than its inverse) collects the same profile set.
  if (rank <= 12) {
    // Packed dedup key: 4 bits per vertex.
    std::unordered_set<std::uint64_t> seen;
    std::vector<signed char> profile(rank);
    for_each_element(rs, cap, [&](std::span<const std::uint16_t> perm) {
      std::uint64_t key = 0;
      for (int v = 0; v < rank; ++v) {
        profile[v] = simple_of[perm[alpha[v]]];
        key = (key << 4) | static_cast<std::uint64_t>(profile[v] + 1);
      }
      if (seen.insert(key).second) out.push_back(profile);
    });
  } else {
    std::set<std::vector<signed char>> seen;
    std::vector<signed char> profile(rank);
    for_each_element(rs, cap, [&](std::span<const std::uint16_t> perm) {
      for (int v = 0; v < rank; ++v) {
        profile[v] = simple_of[perm[alpha[v]]];
      }
      if (seen.insert(profile).second) out.push_back(profile);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<SubsetMap> restrict_profiles(
    const std::vector<std::vector<signed char>>& profiles, VertexSet y1) {
  const auto ys = set_elements(y1);
  std::set<SubsetMap> out;
  for (const auto& p : profiles) {
    SubsetMap m;
    bool ok = true;
    for (int y : ys) {
      if (p[y] < 0) {
        ok = false;
        break;
      }
      m.entries.emplace_back(y, p[y]);
    }
    if (ok) out.insert(std::move(m));
  }
  return out;
}

/// Subsets of x in subset-lex order, the empty set first.
std::vector<VertexSet> subsets_of(VertexSet x) {
  std::vector<VertexSet> out;
  VertexSet sub = 0;
  while (true) {
    out.push_back(sub);
    if (sub == x) break;
    sub = (sub - x) & x;  // next submask
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

}  // namespace

std::set<SubsetMap> realized_maps_oracle(const CoxeterGraph& g, VertexSet y1,
                                         std::uint64_t cap) {
  RootSystem rs(g);
  const auto profiles = collect_profiles(rs, cap);
  return restrict_profiles(profiles, y1);
}

StarContext::StarContext(const CoxeterGraph& g)
    : graph_(g), rs_(g), calc_(rs_) {}

const ReachResult& StarContext::reach(VertexSet y1, bool adjacent_only) {
  const auto key = std::make_pair(y1, adjacent_only);
  auto it = reach_cache_.find(key);
  if (it != reach_cache_.end()) return it->second;
  return reach_cache_.emplace(key, reachable_maps(calc_, y1, adjacent_only))
      .first->second;
}

void StarContext::ensure_profiles(std::uint64_t cap) {
  if (profiles_ready_) return;
  profiles_ = collect_profiles(rs_, cap);
  profiles_ready_ = true;
}

std::set<SubsetMap> StarContext::oracle_maps(VertexSet y1, std::uint64_t cap) {
  ensure_profiles(cap);
  return restrict_profiles(profiles_, y1);
}

std::set<SubsetMap> StarContext::ribbon_maps(VertexSet y1) {
  return reach(y1).maps();
}

StarVerdict decide_star(const CoxeterGraph& s_graph, VertexSet x,
                        Strategy strategy, std::uint64_t cap) {
  StarContext ctx(s_graph);
  return decide_star(ctx, x, strategy, cap);
}

StarVerdict decide_star(StarContext& ctx, VertexSet x, Strategy strategy,
                        std::uint64_t cap) {
  const CoxeterGraph& g = ctx.graph();
  const VertexSet full = full_set(g.rank());
  if (x == 0 || x == full || (x & ~full) != 0) {
    throw BadSubsetError("X must be a nonempty proper subset of the vertices");
  }

  StarVerdict verdict;
  verdict.strategy = strategy;
  verdict.holds = true;

  // Parabolic side context. Vertex indices differ between g and the induced
  // graph; translate via names.
  const CoxeterGraph gx = g.induced(x);
  StarContext xctx(gx);
  std::uint64_t x_order = 0;
  if (strategy != Strategy::Ribbon) {
    x_order = group_order_saturated(gx);
  }
  std::vector<int> to_x(g.rank(), -1);
  for (int v : set_elements(x)) to_x[v] = gx.vertex_index(g.vertex_name(v));
  const auto map_to_x = [&](const SubsetMap& m) {
    SubsetMap out;
    for (const auto& [a, b] : m.entries) {
      out.entries.emplace_back(to_x[a], to_x[b]);
    }
    std::sort(out.entries.begin(), out.entries.end());
    return out;
  };
  const auto set_to_x = [&](VertexSet s) {
    VertexSet out = 0;
    for (int v : set_elements(s)) out = set_with(out, to_x[v]);
    return out;
  };

  for (VertexSet y1 : subsets_of(x)) {
    std::set<SubsetMap> candidates;
    if (strategy == Strategy::Oracle) {
      candidates = ctx.oracle_maps(y1, cap);
    } else {
      candidates = ctx.ribbon_maps(y1);
    }
    const std::set<SubsetMap> x_realized =
        strategy == Strategy::Ribbon
            ? xctx.ribbon_maps(set_to_x(y1))
            : xctx.oracle_maps(set_to_x(y1), cap);
    for (const SubsetMap& m : candidates) {
      if ((m.target() & ~x) != 0) continue;  // image must lie inside X
      if (x_realized.count(map_to_x(m))) continue;

      StarWitness w;
      w.y1 = y1;
      w.map = m;
      const auto chain = ctx.reach(y1).chain_to_map(m);
      w.chain_found = chain.has_value();
      if (chain) w.chain_in_s = *chain;
      if (strategy == Strategy::Ribbon) {
        w.certificate = StarWitness::Certificate::RibbonExhaustion;
      } else {
        w.certificate = StarWitness::Certificate::ExhaustiveEnumeration;
        w.enumerated_count = x_order;
      }
      verdict.holds = false;
      verdict.witness = std::move(w);
      return verdict;
    }
  }

  if (strategy != Strategy::Oracle) {
    verdict.conditional = group_order_saturated(g) > cap;
  }
  return verdict;
}

CrossValidateReport cross_validate(const CoxeterGraph& s_graph,
                                   std::uint64_t cap) {
  if (group_order_saturated(s_graph) > cap) {
    throw CapExceededError("cross validation needs full enumeration", cap);
  }
  CrossValidateReport report;
  StarContext ctx(s_graph);
  const VertexSet full = full_set(s_graph.rank());

  const auto compare_sets = [&](StarContext& c, const std::string& where,
                                VertexSet x, VertexSet y1) {
    const auto oracle = c.oracle_maps(y1, cap);
    const auto ribbon = c.ribbon_maps(y1);
    ++report.map_sets_compared;
    if (oracle == ribbon) return;
    const CoxeterGraph& g = c.graph();
    for (const auto& m : ribbon) {
      if (!oracle.count(m)) {
        std::string d = "ribbon-realized map not oracle-realized (soundness):";
        for (const auto& [a, b] : m.entries) {
          d += " " + g.vertex_name(a) + "->" + g.vertex_name(b);
        }
        report.mismatches.push_back({where, x, y1, d});
      }
    }
    for (const auto& m : oracle) {
      if (!ribbon.count(m)) {
        std::string d = "oracle-realized map unreachable by ribbons:";
        for (const auto& [a, b] : m.entries) {
          d += " " + g.vertex_name(a) + "->" + g.vertex_name(b);
        }
        report.mismatches.push_back({where, x, y1, d});
      }
    }
  };

  // Ambient side: every proper subset of S occurs as some Y1.
  for (VertexSet y1 = 0; y1 < full; ++y1) {
    compare_sets(ctx, "ambient", 0, y1);
  }

  for (VertexSet x = 1; x < full; ++x) {
    ++report.subsets_checked;
    const auto vo = decide_star(ctx, x, Strategy::Oracle, cap);
    const auto vr = decide_star(ctx, x, Strategy::Ribbon, cap);
    if (vo.holds != vr.holds) {
      report.mismatches.push_back(
          {"verdict", x, 0,
           std::string("oracle says ") + (vo.holds ? "holds" : "fails") +
               ", ribbon says " + (vr.holds ? "holds" : "fails")});
    }
    // Parabolic side map sets.
    StarContext xctx(s_graph.induced(x));
    const VertexSet xfull = full_set(xctx.graph().rank());
    const Recognition rec = recognize_within(s_graph, x);
    for (VertexSet y1 = 0; y1 <= xfull; ++y1) {
      compare_sets(xctx, rec.type_name(), x, y1);
    }
  }
  return report;
}

std::string verdict_to_json(const CoxeterGraph& g, VertexSet x,
                            const StarVerdict& v) {
  nlohmann::json j;
  j["holds"] = v.holds;
  j["conditional"] = v.conditional;
  j["strategy"] = strategy_name(v.strategy);
  j["ambient"] = recognize(g).type_name();
  j["subset"] = g.subset_names(x);
  j["subset_type"] = recognize_within(g, x).type_name();
  if (v.witness) {
    const auto& w = *v.witness;
    nlohmann::json jw;
    jw["y1"] = g.subset_names(w.y1);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : w.map.entries) {
      pairs.push_back({g.vertex_name(a), g.vertex_name(b)});
    }
    jw["map"] = std::move(pairs);
    jw["chain_in_s"] =
        nlohmann::json::parse(chain_to_json(g, w.chain_in_s));
    jw["chain_found"] = w.chain_found;
    if (w.certificate == StarWitness::Certificate::ExhaustiveEnumeration) {
      jw["certificate"] = {{"kind", "exhaustive_enumeration"},
                           {"count", w.enumerated_count}};
    } else {
      jw["certificate"] = {{"kind", "ribbon_exhaustion"}};
    }
    j["witness"] = std::move(jw);
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2);
}

std::string verdict_to_text(const CoxeterGraph& g, VertexSet x,
                            const StarVerdict& v) {
  std::string out;
  out += "subset:";
  for (const auto& n : g.subset_names(x)) out += " " + n;
  out += " (type " + recognize_within(g, x).type_name() + ")\n";
  out += std::string("star_w: ") + (v.holds ? "holds" : "fails");
  if (v.conditional) out += " (conditional on ribbon completeness)";
  out += "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    out += "witness y1:";
    for (const auto& n : g.subset_names(w.y1)) out += " " + n;
    out += "\nwitness map:";
    for (const auto& [a, b] : w.map.entries) {
      out += " " + g.vertex_name(a) + "->" + g.vertex_name(b);
    }
    out += "\nchain in ambient: " + chain_to_json(g, w.chain_in_s);
    if (w.certificate == StarWitness::Certificate::ExhaustiveEnumeration) {
      out += "\ncertificate: exhaustive enumeration of " +
             std::to_string(w.enumerated_count) + " elements\n";
    } else {
      out += "\ncertificate: ribbon exhaustion\n";
    }
  }
  return out;
}

}  // namespace coxstab
