#pragma once

#include <string>
#include <vector>

#include "coxstab/star.hpp"

namespace coxstab {

/// Outcome of one reference check; status derives from engine computations
/// compared against the published values, never from recomputing both sides
/// the same way.
struct CheckResult {
  std::string id;
  bool pass{false};
  std::string details;  // structured diff text on failure
};

/// Longest-element conjugation tables: the flip actions for A_n (2<=n<=8),
/// D5, D7, E6, I2(m) for odd m <= 11, and centrality for A1, B_n (n<=8),
/// D_n even, E7, E8, F4, H3, H4, I2(m) even (m<=12); plus the five rows of
/// the E6 graph-automorphism realization table.
std::vector<CheckResult> verify_tables();

/// The Table-1 comparison for one graph claimed to be of the given catalog
/// type; exposed so tests can run it against a deliberately perturbed graph.
CheckResult check_table1_type(const CoxeterGraph& g, const SphericalType& t);

/// Counterexample replays. `which` is one of "a".."e"; `param` selects the
/// ambient for (a) ("E6", "E7", "E8") and k for (d) ("2", "3").
/// Throws BadParamsError for invalid combinations.
CheckResult verify_counterexample(const std::string& which,
                                  const std::string& param = "");

/// The full acceptance set: (a) in E6/E7/E8, (b) in E8, (c) in E8,
/// (d) for k=2,3, (e) in H4.
std::vector<CheckResult> all_counterexample_checks();

/// Case (a) re-run across every labeled embedding of D5 into the ambient.
std::vector<CheckResult> counterexample_a_placements(
    const std::string& ambient);

/// Conjugacy of generators equals odd-bond connectivity, by exhaustive
/// enumeration of the group of the graph.
CheckResult verify_odd_lemma(const CoxeterGraph& g, std::uint64_t cap);

/// Everything the `verify-paper` command runs: tables, all counterexamples,
/// and the odd-bond lemma for every catalog type of rank <= 6 plus
/// I2(5..12).
std::vector<CheckResult> run_all_checks();

std::string checks_to_junit_xml(const std::vector<CheckResult>& checks);
std::string checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace coxstab
