#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxstab/element.hpp"

namespace coxstab {

/// A pointwise conjugation map between generator subsets: a bijection
/// source -> target that is an isomorphism of the induced labeled graphs.
/// Entries are (source vertex, image vertex), sorted by source vertex.
struct SubsetMap {
  std::vector<std::pair<int, int>> entries;

  static SubsetMap identity_on(VertexSet y);

  VertexSet source() const;
  VertexSet target() const;
  int image_of(int v) const;  // throws UnknownVertexError when v not in source
  bool is_identity() const;

  /// this followed by next (next.source() must equal this->target()).
  SubsetMap then(const SubsetMap& next) const;

  /// Letterwise image of a positive word over the source.
  Word map_word(const Word& w) const;

  bool is_graph_isomorphism(const CoxeterGraph& g) const;

  auto operator<=>(const SubsetMap&) const = default;
};

/// One step of a conjugation chain: an elementary ribbon r(t, Z), or
/// conjugation by the longest element of W_{Z''} (allowed in explicit chains
/// only, not in reachability search).
struct Move {
  enum class Kind { Ribbon, W0Conj };
  Kind kind{Kind::Ribbon};
  int t{-1};      // ribbon letter; unused for W0Conj
  VertexSet zset{0};  // ribbon base subset Z, or the W0Conj subset Z''

  static Move ribbon(int t, VertexSet z) { return {Kind::Ribbon, t, z}; }
  static Move w0conj(VertexSet z) { return {Kind::W0Conj, -1, z}; }
  bool operator==(const Move&) const = default;
};

struct RibbonChain {
  std::vector<Move> moves;
  SubsetMap composite;
};

/// Conjugation action of w0(W_{Z''}) restricted to `current` (current must be
/// contained in Z''; throws NotContainedError). Always lands inside Z''.
SubsetMap w0_map(const RootSystem& rs, VertexSet zz, VertexSet current);

/// The conjugation map of the ribbon r(t, Z) on Z, i.e. z ->
/// z^{w0(W_Z) w0(W_{Z+t})}, with target inside Z+{t}. Throws
/// VertexInSubsetError when t is in Z.
struct RibbonStep {
  SubsetMap map;
  bool adjacent;  // whether t neighbors Z in the graph
};
RibbonStep ribbon_map(const RootSystem& rs, int t, VertexSet z);

/// Memoizes longest-element conjugation tables per subset of one ambient
/// root system; shared by reachability searches and deciders.
class RibbonCalc {
 public:
  explicit RibbonCalc(const RootSystem& rs);
  const RootSystem& root_system() const { return *rs_; }
  /// Full conjugation action of w0(W_Z) as vertex -> vertex (only defined on
  /// Z; -1 elsewhere).
  const std::vector<int>& w0_action(VertexSet z);
  SubsetMap ribbon(int t, VertexSet z, bool* adjacent = nullptr);

  /// Whether conjugation by w0(W_{Z''}) keeps every vertex of `current`
  /// simple: each must lie in Z'' or commute with all of Z''.
  bool w0conj_applicable(VertexSet zz, VertexSet current) const;
  /// The restriction of that conjugation to `current` (vertices outside Z''
  /// are fixed). Throws NotContainedError when not applicable.
  SubsetMap w0conj_restriction(VertexSet zz, VertexSet current);

  /// Deduplicated nontrivial W0Conj moves available at a given subset, as
  /// (lex-least realizing Z'', restricted map), in subset-lex order of Z''.
  const std::vector<std::pair<VertexSet, SubsetMap>>& w0conj_moves(
      VertexSet current);

 private:
  const RootSystem* rs_;
  std::map<VertexSet, std::vector<int>> cache_;
  std::map<VertexSet, std::vector<std::pair<VertexSet, SubsetMap>>>
      conj_moves_cache_;
  std::vector<VertexSet> noncommute_;  // per vertex: bond >= 3 neighbors
};

/// One reachable state of the ribbon BFS: the composite map from the source
/// subset, plus the discovery tree edge that produced it.
struct ReachState {
  SubsetMap map;
  int parent{-1};
  Move via;
};

class ReachResult {
 public:
  std::vector<ReachState> states;  // states[0] is (Y, identity)

  const SubsetMap* find_map(const SubsetMap& m) const;
  std::vector<Move> chain_to(std::size_t state_index) const;
  /// Moves reaching the given map; empty optional when not reachable.
  std::optional<std::vector<Move>> chain_to_map(const SubsetMap& m) const;
  std::set<VertexSet> target_subsets() const;
  std::set<SubsetMap> maps() const;

  /// Subset-level arrows (from, letter, to) of the explored moves, one per
  /// (reachable subset, applicable letter).
  struct Arrow {
    VertexSet from;
    int t;
    VertexSet to;
    auto operator<=>(const Arrow&) const = default;
  };
  std::set<Arrow> arrows;
};

/// BFS closure of {(Y, identity)} under ribbon moves r(t, current) for all
/// letters t outside the current subset (restricted to letters adjacent to it
/// when adjacent_only). Deterministic: layers are expanded in (subset-lex,
/// map) order with t ascending. Throws NotSphericalError on non-spherical
/// input.
ReachResult reachable_maps(const CoxeterGraph& g, VertexSet y,
                           bool adjacent_only);
ReachResult reachable_maps(RibbonCalc& calc, VertexSet y, bool adjacent_only);

/// Composes an explicit move sequence starting from Y. Each ribbon's stated
/// subset must equal the running subset and each W0Conj subset must contain
/// it; otherwise ChainMismatchError with the failing index.
RibbonChain apply_chain(const RootSystem& rs, VertexSet y,
                        const std::vector<Move>& moves);

/// The group element realizing a chain (product of the moves' longest-element
/// factors); conjugation by it induces the chain's composite map.
GroupElement chain_element(const RootSystem& rs, VertexSet y,
                           const std::vector<Move>& moves);

/// Chain serialization:
///   [{"ribbon":["t",["z1","z2"]]},{"w0conj":["z1","z2","z3"]}]
std::string chain_to_json(const CoxeterGraph& g, const std::vector<Move>& moves);
std::vector<Move> chain_from_json(const CoxeterGraph& g,
                                  const std::string& text);

}  // namespace coxstab
