#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxstab/ribbons.hpp"

namespace coxstab {

enum class Strategy { Oracle, Ribbon, Hybrid };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

inline constexpr std::uint64_t kDefaultCap = 4'000'000;

/// Everything needed to certify a FAILS verdict: a pair (Y1, map) that the
/// ambient group realizes but the parabolic does not, with the realizing
/// chain and the exhaustion certificate on the parabolic side.
struct StarWitness {
  VertexSet y1{0};
  SubsetMap map;
  std::vector<Move> chain_in_s;
  bool chain_found{false};
  enum class Certificate { ExhaustiveEnumeration, RibbonExhaustion };
  Certificate certificate{Certificate::ExhaustiveEnumeration};
  std::uint64_t enumerated_count{0};
};

struct StarVerdict {
  bool holds{false};
  /// Set when the ambient side was decided by ribbon reachability on a group
  /// too large to enumerate at the configured cap; such HOLDS verdicts rest
  /// on ribbon completeness (validated separately on enumerable groups).
  bool conditional{false};
  std::optional<StarWitness> witness;
  Strategy strategy{Strategy::Hybrid};
};

/// All pointwise conjugation maps of Y1 to generator subsets realized by
/// elements of the (whole) group of the graph, by exhaustive enumeration.
std::set<SubsetMap> realized_maps_oracle(const CoxeterGraph& g, VertexSet y1,
                                         std::uint64_t cap);

/// Per-ambient scratch shared across many decisions (sweep rows, cross
/// validation): root system, ribbon caches, reachability and oracle results.
class StarContext {
 public:
  explicit StarContext(const CoxeterGraph& g);
  // The ribbon calculator points into the owned root system.
  StarContext(const StarContext&) = delete;
  StarContext& operator=(const StarContext&) = delete;

  const CoxeterGraph& graph() const { return graph_; }
  const RootSystem& root_system() const { return rs_; }
  RibbonCalc& ribbons() { return calc_; }

  const ReachResult& reach(VertexSet y1, bool adjacent_only = false);
  /// Restrictions of the ambient oracle's conjugation profiles to Y1
  /// (all W-realized pointwise maps of Y1 into the generator set).
  std::set<SubsetMap> oracle_maps(VertexSet y1, std::uint64_t cap);
  std::set<SubsetMap> ribbon_maps(VertexSet y1);

 private:
  void ensure_profiles(std::uint64_t cap);

  CoxeterGraph graph_;
  RootSystem rs_;
  RibbonCalc calc_;
  std::map<std::pair<VertexSet, bool>, ReachResult> reach_cache_;
  /// Distinct full conjugation profiles: profile[v] = image vertex when v's
  /// conjugate is again a generator, -1 otherwise.
  std::vector<std::vector<signed char>> profiles_;
  bool profiles_ready_{false};
};

/// Decides Property star_W for the pair (W_X, W_S).
///
/// Holds iff for every Y1 contained in X, every W_S-realized pointwise map of
/// Y1 with image inside X is also W_X-realized. Strategies: Oracle enumerates
/// both sides; Ribbon uses reachability closures on both sides; Hybrid
/// (default) searches the ambient side by ribbons and certifies the parabolic
/// side by enumeration of W_X, so FAILS verdicts are unconditional even when
/// W_S is too large to enumerate.
StarVerdict decide_star(const CoxeterGraph& s_graph, VertexSet x,
                        Strategy strategy = Strategy::Hybrid,
                        std::uint64_t cap = kDefaultCap);
StarVerdict decide_star(StarContext& ctx, VertexSet x, Strategy strategy,
                        std::uint64_t cap);

/// Compares the oracle and ribbon routes on every proper nonempty subset of
/// the generators: verdicts, the per-Y1 map sets realized in W_S, and the
/// per-Y1 map sets realized in each W_X. Any discrepancy disproves the ribbon
/// completeness assumption and is reported with the offending pair.
struct CrossValidateReport {
  struct Mismatch {
    std::string where;  // "ambient" or the X type name
    VertexSet x{0};
    VertexSet y1{0};
    std::string detail;
  };
  std::vector<Mismatch> mismatches;
  std::uint64_t subsets_checked{0};
  std::uint64_t map_sets_compared{0};
  bool ok() const { return mismatches.empty(); }
};

CrossValidateReport cross_validate(const CoxeterGraph& s_graph,
                                   std::uint64_t cap);

std::string verdict_to_json(const CoxeterGraph& g, VertexSet x,
                            const StarVerdict& v);
std::string verdict_to_text(const CoxeterGraph& g, VertexSet x,
                            const StarVerdict& v);

}  // namespace coxstab
