#include "coxstab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxstab/checks.hpp"
#include "coxstab/classify.hpp"
#include "coxstab/star.hpp"

namespace coxstab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct CommonOpts {
  std::uint64_t cap = kDefaultCap;
  std::string strategy = "hybrid";
  std::string output = "text";
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--cap", o.cap, "enumeration cap (default 4000000)");
  cmd->add_option("--strategy", o.strategy, "oracle|ribbon|hybrid");
  cmd->add_option("--output", o.output, "text|json|tsv");
  cmd->add_option("--config", o.config_path, "JSON config file");
}

/// Flags win over the config file; the file only fills defaults.
void apply_config(const CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw BadParamsError("cannot open config file: " + o.config_path);
  nlohmann::json j;
  in >> j;
  if (j.contains("cap") && cmd->count("--cap") == 0) {
    o.cap = j["cap"].get<std::uint64_t>();
  }
  if (j.contains("strategy") && cmd->count("--strategy") == 0) {
    o.strategy = j["strategy"].get<std::string>();
  }
  if (j.contains("output") && cmd->count("--output") == 0) {
    o.output = j["output"].get<std::string>();
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

CoxeterGraph load_graph(const std::string& type_name,
                        const std::string& graph_path) {
  if (!type_name.empty() && !graph_path.empty()) {
    throw BadParamsError("give either --type or --graph, not both");
  }
  if (!type_name.empty()) return CoxeterGraph::from_name(type_name);
  if (graph_path.empty()) {
    throw BadParamsError("a graph is required (--type or --graph)");
  }
  std::ifstream in(graph_path);
  if (!in) throw BadParamsError("cannot open graph file: " + graph_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

std::string subset_map_text(const CoxeterGraph& g, const SubsetMap& m) {
  std::string out;
  for (const auto& [a, b] : m.entries) {
    if (!out.empty()) out += " ";
    out += g.vertex_name(a) + "->" + g.vertex_name(b);
  }
  return out;
}

int cmd_star(const CoxeterGraph& g, const std::string& subset,
             const std::string& x_type, const CommonOpts& o,
             std::ostream& out) {
  const Strategy strategy = strategy_from_name(o.strategy);
  std::vector<std::pair<std::string, VertexSet>> targets;
  if (!subset.empty()) {
    targets.emplace_back(subset, g.parse_subset(split_commas(subset)));
  } else if (!x_type.empty()) {
    const CoxeterGraph canon = CoxeterGraph::from_name(x_type);
    const Recognition rec = recognize(canon);
    for (const auto& p : find_placements(g, rec.components[0].type)) {
      std::string label;
      for (std::size_t i = 0; i < p.canon_to_vertex.size(); ++i) {
        if (i) label += ",";
        label += "x" + std::to_string(i + 1) + "=" +
                 g.vertex_name(p.canon_to_vertex[i]);
      }
      targets.emplace_back(label, p.subset);
    }
    if (targets.empty()) {
      throw BadParamsError("no placement of " + x_type + " in the ambient");
    }
  } else {
    throw BadParamsError("star needs --subset or --x-type");
  }
  StarContext ctx(g);
  const bool many = targets.size() > 1;
  bool json_first = true;
  if (o.output == "json" && many) out << "[\n";
  for (const auto& [label, x] : targets) {
    const StarVerdict v = decide_star(ctx, x, strategy, o.cap);
    if (o.output == "json") {
      if (!json_first) out << ",\n";
      json_first = false;
      out << verdict_to_json(g, x, v);
    } else {
      if (many) out << "placement: " << label << "\n";
      out << verdict_to_text(g, x, v);
    }
  }
  if (o.output == "json") out << (many ? "\n]\n" : "\n");
  return kExitOk;
}

int cmd_sweep(int max_rank, int i2_max, bool timing, const CommonOpts& o,
              std::ostream& out) {
  const SweepResult r =
      sweep(max_rank, i2_max, strategy_from_name(o.strategy), o.cap, timing);
  if (o.output == "json") {
    out << sweep_to_json(r) << "\n";
  } else {
    out << sweep_to_tsv(r);
    if (o.output == "text") {
      out << "# rows=" << r.rows.size() << " disagreements=" << r.disagreements
          << " skipped=" << r.skipped << "\n";
    }
  }
  if (r.disagreements > 0) return kExitMismatch;
  if (r.skipped > 0) return kExitCap;
  return kExitOk;
}

int cmd_w0(const CoxeterGraph& g, const std::string& subset,
           const CommonOpts& o, std::ostream& out) {
  const RootSystem rs(g);
  const VertexSet z = subset.empty() ? full_set(g.rank())
                                     : g.parse_subset(split_commas(subset));
  const SubsetMap m = w0_map(rs, z, z);
  if (o.output == "json") {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : m.entries) {
      pairs.push_back({g.vertex_name(a), g.vertex_name(b)});
    }
    const GroupElement w0 = longest_element(rs, z);
    nlohmann::json j;
    j["map"] = std::move(pairs);
    j["length"] = w0.length();
    j["word"] = word_names(g, reduced_word(w0));
    out << j.dump(2) << "\n";
  } else {
    out << subset_map_text(g, m) << "\n";
  }
  return kExitOk;
}

int cmd_ribbon(const CoxeterGraph& g, const std::string& t_name,
               const std::string& z_names, const CommonOpts& o,
               std::ostream& out) {
  const RootSystem rs(g);
  const int t = g.vertex_index(t_name);
  const VertexSet z = g.parse_subset(split_commas(z_names));
  const RibbonStep step = ribbon_map(rs, t, z);
  if (o.output == "json") {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : step.map.entries) {
      pairs.push_back({g.vertex_name(a), g.vertex_name(b)});
    }
    nlohmann::json j;
    j["map"] = std::move(pairs);
    j["target"] = g.subset_names(step.map.target());
    j["adjacent"] = step.adjacent;
    out << j.dump(2) << "\n";
  } else {
    out << subset_map_text(g, step.map) << "\n";
    out << "target:";
    for (const auto& n : g.subset_names(step.map.target())) out << " " << n;
    out << (step.adjacent ? " (adjacent ribbon)" : " (non-adjacent)") << "\n";
  }
  return kExitOk;
}

int cmd_reach(const CoxeterGraph& g, const std::string& y_names,
              bool adjacent_only, const CommonOpts& o, std::ostream& out) {
  const VertexSet y = g.parse_subset(split_commas(y_names));
  const ReachResult res = reachable_maps(g, y, adjacent_only);
  if (o.output == "json") {
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t i = 0; i < res.states.size(); ++i) {
      const auto& st = res.states[i];
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [a, b] : st.map.entries) {
        pairs.push_back({g.vertex_name(a), g.vertex_name(b)});
      }
      states.push_back(
          {{"target", g.subset_names(st.map.target())},
           {"map", std::move(pairs)},
           {"chain", nlohmann::json::parse(
                         chain_to_json(g, res.chain_to(i)))}});
    }
    nlohmann::json j;
    j["states"] = std::move(states);
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < res.states.size(); ++i) {
      const auto& st = res.states[i];
      out << "state " << i << ": target {";
      const auto names = g.subset_names(st.map.target());
      for (std::size_t k = 0; k < names.size(); ++k) {
        out << (k ? "," : "") << names[k];
      }
      out << "} map " << subset_map_text(g, st.map) << " via "
          << chain_to_json(g, res.chain_to(i)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify_paper(const std::string& xml_path, const std::string& json_path,
                     std::ostream& out) {
  const auto checks = run_all_checks();
  std::size_t failures = 0;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.pass) out << "  [" << c.details << "]";
    out << "\n";
    if (!c.pass) ++failures;
  }
  out << checks.size() - failures << "/" << checks.size() << " checks passed\n";
  if (!xml_path.empty()) {
    std::ofstream f(xml_path);
    f << checks_to_junit_xml(checks);
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    f << checks_to_json(checks);
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_recognize(const CoxeterGraph& g, const std::string& subset,
                  const CommonOpts& o, std::ostream& out) {
  const VertexSet x = subset.empty() ? full_set(g.rank())
                                     : g.parse_subset(split_commas(subset));
  const Recognition rec = recognize_within(g, x);
  if (o.output == "json") {
    nlohmann::json comps = nlohmann::json::array();
    if (rec.spherical) {
      for (const auto& c : rec.components) {
        nlohmann::json relabel = nlohmann::json::array();
        for (std::size_t i = 0; i < c.canon_to_vertex.size(); ++i) {
          relabel.push_back({"s" + std::to_string(i + 1),
                             g.vertex_name(c.canon_to_vertex[i])});
        }
        comps.push_back(
            {{"type", c.type.name()}, {"relabeling", std::move(relabel)}});
      }
    }
    nlohmann::json j;
    j["spherical"] = rec.spherical;
    j["components"] = std::move(comps);
    out << j.dump(2) << "\n";
  } else {
    if (!rec.spherical) {
      out << "not spherical\n";
    } else {
      out << rec.type_name() << "\n";
      for (const auto& c : rec.components) {
        out << "  " << c.type.name() << ":";
        for (std::size_t i = 0; i < c.canon_to_vertex.size(); ++i) {
          out << " s" << i + 1 << "=" << g.vertex_name(c.canon_to_vertex[i]);
        }
        out << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact conjugacy-stability calculator for spherical "
               "Coxeter/Artin parabolic subgroups"};
  app.require_subcommand(1);

  std::string type_name, graph_path, subset, x_type, t_name, z_names, y_names;
  std::string xml_path, json_path;
  int max_rank = 4, i2_max = 8;
  bool adjacent_only = false, timing = false;
  CommonOpts common;

  auto* star = app.add_subcommand("star", "decide the star property for X");
  star->add_option("--type", type_name, "ambient catalog type, e.g. E6");
  star->add_option("--graph", graph_path, "ambient graph JSON file");
  star->add_option("--subset", subset, "comma-separated vertices of X");
  star->add_option("--x-type", x_type,
                   "decide every placement of this type instead");
  add_common(star, common);

  auto* sw = app.add_subcommand("sweep", "classification sweep vs the rules");
  sw->add_option("--max-rank", max_rank, "maximum rank")->required();
  sw->add_option("--i2-max", i2_max, "largest I2 bond (default 8)");
  sw->add_flag("--timing", timing, "record per-row times");
  add_common(sw, common);

  auto* w0 = app.add_subcommand("w0", "longest-element conjugation map");
  w0->add_option("--type", type_name, "catalog type");
  w0->add_option("--graph", graph_path, "graph JSON file");
  w0->add_option("--subset", subset, "restrict to the parabolic on these");
  add_common(w0, common);

  auto* rb = app.add_subcommand("ribbon", "elementary ribbon map r(t, Z)");
  rb->add_option("--type", type_name, "catalog type");
  rb->add_option("--graph", graph_path, "graph JSON file");
  rb->add_option("-t", t_name, "ribbon letter")->required();
  rb->add_option("-Z", z_names, "comma-separated base subset")->required();
  add_common(rb, common);

  auto* rc = app.add_subcommand("reach", "ribbon reachability closure");
  rc->add_option("--type", type_name, "catalog type");
  rc->add_option("--graph", graph_path, "graph JSON file");
  rc->add_option("-Y", y_names, "comma-separated source subset")->required();
  rc->add_flag("--adjacent-only", adjacent_only, "adjacent ribbons only");
  add_common(rc, common);

  auto* vp = app.add_subcommand("verify-paper",
                                "run every reference table / example check");
  vp->add_option("--xml", xml_path, "write a JUnit XML report");
  vp->add_option("--json", json_path, "write a JSON report");
  add_common(vp, common);

  auto* rec = app.add_subcommand("recognize", "catalog types of a graph");
  rec->add_option("--type", type_name, "catalog type");
  rec->add_option("--graph", graph_path, "graph JSON file");
  rec->add_option("--subset", subset, "recognize the induced subgraph");
  add_common(rec, common);

  try {
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.name("coxstab");
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's machinery.
      std::ostringstream os;
      os << app.help();
      out << os.str();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (star->parsed()) {
      apply_config(star, common);
      return cmd_star(load_graph(type_name, graph_path), subset, x_type,
                      common, out);
    }
    if (sw->parsed()) {
      apply_config(sw, common);
      return cmd_sweep(max_rank, i2_max, timing, common, out);
    }
    if (w0->parsed()) {
      apply_config(w0, common);
      return cmd_w0(load_graph(type_name, graph_path), subset, common, out);
    }
    if (rb->parsed()) {
      apply_config(rb, common);
      return cmd_ribbon(load_graph(type_name, graph_path), t_name, z_names,
                        common, out);
    }
    if (rc->parsed()) {
      apply_config(rc, common);
      return cmd_reach(load_graph(type_name, graph_path), y_names,
                       adjacent_only, common, out);
    }
    if (vp->parsed()) {
      apply_config(vp, common);
      return cmd_verify_paper(xml_path, json_path, out);
    }
    if (rec->parsed()) {
      apply_config(rec, common);
      return cmd_recognize(load_graph(type_name, graph_path), subset, common,
                           out);
    }
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (count " << e.partial_count << ")\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coxstab
