#include "coxstab/ribbons.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

namespace coxstab {

SubsetMap SubsetMap::identity_on(VertexSet y) {
  SubsetMap m;
  for (int v : set_elements(y)) m.entries.emplace_back(v, v);
  return m;
}

VertexSet SubsetMap::source() const {
  VertexSet s = 0;
  for (const auto& [from, to] : entries) s = set_with(s, from);
  return s;
}

VertexSet SubsetMap::target() const {
  VertexSet s = 0;
  for (const auto& [from, to] : entries) s = set_with(s, to);
  return s;
}

int SubsetMap::image_of(int v) const {
  for (const auto& [from, to] : entries) {
    if (from == v) return to;
  }
  throw UnknownVertexError("vertex not in map source");
}

bool SubsetMap::is_identity() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.first == e.second; });
}

SubsetMap SubsetMap::then(const SubsetMap& next) const {
  assert(target() == next.source());
  SubsetMap out;
  out.entries.reserve(entries.size());
  for (const auto& [from, to] : entries) {
    out.entries.emplace_back(from, next.image_of(to));
  }
  return out;
}

Word SubsetMap::map_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (int v : w) out.push_back(image_of(v));
  return out;
}

bool SubsetMap::is_graph_isomorphism(const CoxeterGraph& g) const {
  if (set_size(source()) != static_cast<int>(entries.size()) ||
      set_size(target()) != static_cast<int>(entries.size())) {
    return false;  // not injective
  }
  for (const auto& [a, fa] : entries) {
    for (const auto& [b, fb] : entries) {
      if (g.bond(a, b) != g.bond(fa, fb)) return false;
    }
  }
  return true;
}

SubsetMap w0_map(const RootSystem& rs, VertexSet zz, VertexSet current) {
  if ((current & ~zz) != 0) {
    throw NotContainedError("subset is not contained in the w0 support");
  }
  const GroupElement w0 = longest_element(rs, zz);
  SubsetMap out;
  for (int y : set_elements(current)) {
    const auto t = simple_conjugate(w0, y);
    if (!t) {
      throw Error("w0 conjugation left the generator set");  // S^{w0} = S
    }
    out.entries.emplace_back(y, *t);
  }
  return out;
}

RibbonStep ribbon_map(const RootSystem& rs, int t, VertexSet z) {
  RibbonCalc calc(rs);
  RibbonStep step;
  step.map = calc.ribbon(t, z, &step.adjacent);
  return step;
}

RibbonCalc::RibbonCalc(const RootSystem& rs) : rs_(&rs) {
  const CoxeterGraph& g = rs.graph();
  noncommute_.assign(g.rank(), 0);
  for (int v = 0; v < g.rank(); ++v) {
    for (int u = 0; u < g.rank(); ++u) {
      if (g.adjacent(v, u)) noncommute_[v] = set_with(noncommute_[v], u);
    }
  }
}

bool RibbonCalc::w0conj_applicable(VertexSet zz, VertexSet current) const {
  for (int z : set_elements(current & ~zz)) {
    if ((noncommute_[z] & zz) != 0) return false;
  }
  return true;
}

SubsetMap RibbonCalc::w0conj_restriction(VertexSet zz, VertexSet current) {
  if (!w0conj_applicable(zz, current)) {
    throw NotContainedError(
        "subset neither contained in nor commuting with the w0 support");
  }
  const auto& action = w0_action(zz);
  SubsetMap out;
  for (int z : set_elements(current)) {
    out.entries.emplace_back(z, set_contains(zz, z) ? action[z] : z);
  }
  return out;
}

const std::vector<std::pair<VertexSet, SubsetMap>>& RibbonCalc::w0conj_moves(
    VertexSet current) {
  auto it = conj_moves_cache_.find(current);
  if (it != conj_moves_cache_.end()) return it->second;
  const int rank = rs_->rank();
  if (rank > 16) {
    throw Error("reachability closure supports rank <= 16");
  }
  std::vector<VertexSet> candidates;
  for (VertexSet zz = 1; zz <= full_set(rank); ++zz) {
    if ((zz & current) == 0) continue;  // restriction would be the identity
    if (!w0conj_applicable(zz, current)) continue;
    candidates.push_back(zz);
  }
  std::sort(candidates.begin(), candidates.end(), subset_lex_less);
  std::vector<std::pair<VertexSet, SubsetMap>> moves;
  std::set<SubsetMap> seen;
  for (VertexSet zz : candidates) {
    SubsetMap m = w0conj_restriction(zz, current);
    if (m.is_identity()) continue;
    if (seen.insert(m).second) moves.emplace_back(zz, std::move(m));
  }
  return conj_moves_cache_.emplace(current, std::move(moves)).first->second;
}

const std::vector<int>& RibbonCalc::w0_action(VertexSet z) {
  auto it = cache_.find(z);
  if (it != cache_.end()) return it->second;
  const GroupElement w0 = longest_element(*rs_, z);
  std::vector<int> action(rs_->rank(), -1);
  for (int y : set_elements(z)) {
    const auto img = simple_conjugate(w0, y);
    if (!img) throw Error("w0 conjugation left the generator set");
    action[y] = *img;
  }
  return cache_.emplace(z, std::move(action)).first->second;
}

SubsetMap RibbonCalc::ribbon(int t, VertexSet z, bool* adjacent) {
  if (set_contains(z, t)) {
    throw VertexInSubsetError("ribbon letter lies in the subset");
  }
  if (t < 0 || t >= rs_->rank()) {
    throw UnknownVertexError("ribbon letter out of range");
  }
  const auto& inner = w0_action(z);
  const auto& outer = w0_action(set_with(z, t));
  SubsetMap out;
  for (int y : set_elements(z)) {
    out.entries.emplace_back(y, outer[inner[y]]);
  }
  if (!out.is_graph_isomorphism(rs_->graph())) {
    throw Error("ribbon map is not a labeled-graph isomorphism");
  }
  if (adjacent) *adjacent = rs_->graph().adjacent_to_set(t, z);
  return out;
}

const SubsetMap* ReachResult::find_map(const SubsetMap& m) const {
  for (const auto& st : states) {
    if (st.map == m) return &st.map;
  }
  return nullptr;
}

std::vector<Move> ReachResult::chain_to(std::size_t state_index) const {
  std::vector<Move> moves;
  for (int i = static_cast<int>(state_index); states[i].parent >= 0;
       i = states[i].parent) {
    moves.push_back(states[i].via);
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

std::optional<std::vector<Move>> ReachResult::chain_to_map(
    const SubsetMap& m) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].map == m) return chain_to(i);
  }
  return std::nullopt;
}

std::set<VertexSet> ReachResult::target_subsets() const {
  std::set<VertexSet> out;
  for (const auto& st : states) out.insert(st.map.target());
  return out;
}

std::set<SubsetMap> ReachResult::maps() const {
  std::set<SubsetMap> out;
  for (const auto& st : states) out.insert(st.map);
  return out;
}

ReachResult reachable_maps(RibbonCalc& calc, VertexSet y, bool adjacent_only) {
  const CoxeterGraph& g = calc.root_system().graph();
  ReachResult res;
  res.states.push_back(ReachState{SubsetMap::identity_on(y), -1, Move{}});
  std::set<SubsetMap> seen{res.states[0].map};
  std::vector<int> layer{0};
  while (!layer.empty()) {
    // Deterministic expansion: subset-lex order of the state's target subset,
    // then map order; letters ascending.
    std::sort(layer.begin(), layer.end(), [&](int a, int b) {
      const auto& ma = res.states[a].map;
      const auto& mb = res.states[b].map;
      const VertexSet ta = ma.target(), tb = mb.target();
      if (ta != tb) return subset_lex_less(ta, tb);
      return ma < mb;
    });
    std::vector<int> next;
    const auto push_state = [&](int parent, SubsetMap composed, Move via) {
      if (!composed.is_graph_isomorphism(g)) {
        throw Error("reachability produced a non-isomorphism state");
      }
      if (!seen.insert(composed).second) return;
      next.push_back(static_cast<int>(res.states.size()));
      res.states.push_back(ReachState{std::move(composed), parent, via});
    };
    for (int idx : layer) {
      const VertexSet cur = res.states[idx].map.target();
      for (int t = 0; t < g.rank(); ++t) {
        if (set_contains(cur, t)) continue;
        if (adjacent_only && !g.adjacent_to_set(t, cur)) continue;
        const SubsetMap step = calc.ribbon(t, cur);
        res.arrows.insert({cur, t, step.target()});
        push_state(idx, res.states[idx].map.then(step), Move::ribbon(t, cur));
      }
      if (adjacent_only) continue;
      // Longest-element conjugation moves; without them, composites of
      // subset-based ribbons have even w0-parity at a fixed subset and miss
      // pointwise flips the group realizes.
      for (const auto& [zz, step] : calc.w0conj_moves(cur)) {
        push_state(idx, res.states[idx].map.then(step), Move::w0conj(zz));
      }
    }
    layer = std::move(next);
  }
  return res;
}

ReachResult reachable_maps(const CoxeterGraph& g, VertexSet y,
                           bool adjacent_only) {
  RootSystem rs(g);  // throws NotSphericalError on bad input
  RibbonCalc calc(rs);
  return reachable_maps(calc, y, adjacent_only);
}

RibbonChain apply_chain(const RootSystem& rs, VertexSet y,
                        const std::vector<Move>& moves) {
  RibbonCalc calc(rs);
  RibbonChain chain;
  chain.moves = moves;
  chain.composite = SubsetMap::identity_on(y);
  VertexSet cur = y;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& mv = moves[i];
    SubsetMap step;
    if (mv.kind == Move::Kind::Ribbon) {
      if (mv.zset != cur) {
        throw ChainMismatchError("ribbon base does not match running subset",
                                 i);
      }
      step = calc.ribbon(mv.t, cur);
    } else {
      if (!calc.w0conj_applicable(mv.zset, cur)) {
        throw ChainMismatchError(
            "w0 conjugation subset neither contains nor commutes with the "
            "running subset",
            i);
      }
      step = calc.w0conj_restriction(mv.zset, cur);
    }
    chain.composite = chain.composite.then(step);
    cur = step.target();
  }
  return chain;
}

GroupElement chain_element(const RootSystem& rs, VertexSet y,
                           const std::vector<Move>& moves) {
  GroupElement w = GroupElement::identity(rs);
  VertexSet cur = y;
  RibbonCalc calc(rs);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& mv = moves[i];
    if (mv.kind == Move::Kind::Ribbon) {
      if (mv.zset != cur) {
        throw ChainMismatchError("ribbon base does not match running subset",
                                 i);
      }
      // theta(r(t, Z)) = w0(W_Z) w0(W_{Z+t})
      w = w * longest_element(rs, cur);
      w = w * longest_element(rs, set_with(cur, mv.t));
      cur = calc.ribbon(mv.t, cur).target();
    } else {
      if (!calc.w0conj_applicable(mv.zset, cur)) {
        throw ChainMismatchError(
            "w0 conjugation subset neither contains nor commutes with the "
            "running subset",
            i);
      }
      w = w * longest_element(rs, mv.zset);
      cur = calc.w0conj_restriction(mv.zset, cur).target();
    }
  }
  return w;
}

std::string chain_to_json(const CoxeterGraph& g,
                          const std::vector<Move>& moves) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Move& mv : moves) {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& n : g.subset_names(mv.zset)) names.push_back(n);
    if (mv.kind == Move::Kind::Ribbon) {
      arr.push_back({{"ribbon", {g.vertex_name(mv.t), names}}});
    } else {
      arr.push_back({{"w0conj", names}});
    }
  }
  return arr.dump();
}

std::vector<Move> chain_from_json(const CoxeterGraph& g,
                                  const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<Move> moves;
  for (const auto& item : arr) {
    if (item.contains("ribbon")) {
      const auto& r = item.at("ribbon");
      const int t = g.vertex_index(r.at(0).get<std::string>());
      const VertexSet z =
          g.parse_subset(r.at(1).get<std::vector<std::string>>());
      moves.push_back(Move::ribbon(t, z));
    } else if (item.contains("w0conj")) {
      const VertexSet z =
          g.parse_subset(item.at("w0conj").get<std::vector<std::string>>());
      moves.push_back(Move::w0conj(z));
    } else {
      throw BadParamsError("chain entry must be a ribbon or w0conj");
    }
  }
  return moves;
}

}  // namespace coxstab
