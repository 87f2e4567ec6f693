#pragma once

#include <string>
#include <vector>

#include "coxstab/star.hpp"

namespace coxstab {

/// Expected conjugacy-stability verdict for the standard parabolic A_X inside
/// the irreducible spherical A_S, from the classification rules:
/// an irreducible X is stable unless it is D5 inside E6/E7/E8 (1a), D7 inside
/// E8 (1b), E7 inside E8 (1c), of type D_{2k} (1d), or H3 inside H4 (1e);
/// a reducible X is unstable unless the ambient is F4 (2b) or the ambient is
/// B_n with X = {s1} u Z, Z inside {s3..s_n} irreducible (2a).
struct ExpectedOutcome {
  bool stable{true};
  /// "" (irreducible default), "1a".."1e", "reducible", "2a", "2b".
  std::string rule;
};

ExpectedOutcome expected_verdict(const CoxeterGraph& s_graph, VertexSet x);

/// Componentwise split of a (possibly disconnected) ambient: pairs of
/// (component graph, X restricted to it, in the component's own indexing).
/// The overall verdict is the conjunction over components where the
/// restriction is proper and nonempty; others contribute true.
struct ReducedPair {
  CoxeterGraph component;
  VertexSet x;
};
std::vector<ReducedPair> reducible_reduction(const CoxeterGraph& s_graph,
                                             VertexSet x);

/// Stability of A_X in a possibly reducible ambient, via the reduction plus
/// expected_verdict per component.
bool expected_verdict_any(const CoxeterGraph& s_graph, VertexSet x);

/// All catalog types swept by the classification: A1..A_max, B2.., D4..,
/// E6/E7/E8, F4, H3/H4 within the rank bound, and I2(m) for 5 <= m <= i2_max.
std::vector<SphericalType> catalog_types(int max_rank, int i2_max);

struct SweepRow {
  std::string type;
  std::vector<std::string> x_names;
  std::string x_component_types;
  bool decided{false};
  bool expected{false};
  bool conditional{false};
  bool skipped{false};  // CapExceeded under the Oracle strategy
  std::string rule;
  std::int64_t time_ms{0};
};

struct SweepResult {
  std::vector<SweepRow> rows;
  Strategy strategy{Strategy::Hybrid};
  int disagreements{0};
  int skipped{0};
  bool all_agree() const { return disagreements == 0; }
};

SweepResult sweep(int max_rank, int i2_max, Strategy strategy,
                  std::uint64_t cap, bool timing = false);

std::string sweep_to_tsv(const SweepResult& r);
std::string sweep_to_json(const SweepResult& r);

}  // namespace coxstab
