#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxstab/errors.hpp"

namespace coxstab {

/// Bond value m(s,t) = infinity.
inline constexpr int kInfiniteBond = std::numeric_limits<int>::max();

/// Subset of the generators of a graph, as a bitmask over vertex indices.
/// Everything subset-shaped (parabolic supports, ribbon states, sweep rows)
/// goes through these; graphs used with them are capped at 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr bool set_contains(VertexSet s, int v) {
  return (s >> v) & 1u;
}
inline constexpr VertexSet set_with(VertexSet s, int v) {
  return s | (VertexSet{1} << v);
}
inline constexpr VertexSet set_without(VertexSet s, int v) {
  return s & ~(VertexSet{1} << v);
}
inline constexpr VertexSet full_set(int rank) {
  return rank >= 64 ? ~VertexSet{0} : (VertexSet{1} << rank) - 1;
}
int set_size(VertexSet s);
std::vector<int> set_elements(VertexSet s);
VertexSet set_from(const std::vector<int>& elements);

/// Compares subsets by their sorted element sequences (subset-lex order):
/// {0} < {0,1} < {0,2} < {1}.
bool subset_lex_less(VertexSet a, VertexSet b);

enum class Family { A, B, D, E, F, H, I2 };

/// One entry of the catalog of connected spherical graphs.
struct SphericalType {
  Family family{Family::A};
  int rank{1};
  int i2_bond{0};  // m for I2(m), 0 otherwise

  std::string name() const;
  bool operator==(const SphericalType&) const = default;
};

/// A Coxeter matrix over a finite ordered vertex set, viewed as a labeled
/// graph: edge where m(s,t) >= 3, label shown when >= 4.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  /// Catalog constructor; accepts the type-name grammar
  ///   A<n> | B<n> | D<n> | E6|E7|E8 | F4 | H3|H4 | I2(<m>)
  /// with admissible parameters (plus "G2" as an alias for I2(6)).
  /// Vertices are named s1..sn with the pinned numbering: the 4-bond of B_n
  /// on s1-s2, the fork of D_n at {s1,s2}-s3, the branch vertex of E_n being
  /// s2 attached to s4, the 4-bond of F4 on s2-s3, the 5-bond of H_n on s1-s2.
  static CoxeterGraph from_name(std::string_view name);

  /// Validating constructor from an explicit matrix. Entries are bond values,
  /// kInfiniteBond for infinity. Throws NotSymmetricError / BadDiagonalError /
  /// BadEntryError.
  static CoxeterGraph from_matrix(const std::vector<std::vector<int>>& m,
                                  std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  int bond(int s, int t) const { return matrix_[s][t]; }

  /// Index of a named vertex; throws UnknownVertexError.
  int vertex_index(std::string_view name) const;
  std::optional<int> find_vertex(std::string_view name) const;

  VertexSet parse_subset(const std::vector<std::string>& names) const;
  std::vector<std::string> subset_names(VertexSet s) const;

  /// Induced subgraph on X; vertex names are preserved.
  CoxeterGraph induced(VertexSet x) const;

  bool adjacent(int s, int t) const { return s != t && matrix_[s][t] >= 3; }
  /// True when t has an edge to at least one vertex of z.
  bool adjacent_to_set(int t, VertexSet z) const;

  std::vector<VertexSet> connected_components() const;
  std::vector<VertexSet> components_within(VertexSet x) const;

  bool operator==(const CoxeterGraph& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> matrix_;
};

/// Recognized connected component: its catalog type plus the explicit
/// relabeling canonical -> graph vertex (canon_to_vertex[i] is the graph
/// vertex playing s_{i+1} of the catalog graph).
struct ComponentType {
  SphericalType type;
  std::vector<int> canon_to_vertex;
  VertexSet support() const;
};

struct Recognition {
  bool spherical{false};
  /// Valid only when spherical; ordered by smallest vertex index.
  std::vector<ComponentType> components;

  std::string type_name() const;  // e.g. "D5" or "A1 x A2"
};

/// Matches every connected component against the catalog of spherical types
/// (NotSpherical is expressed by spherical=false, never an exception).
Recognition recognize(const CoxeterGraph& g);
Recognition recognize_within(const CoxeterGraph& g, VertexSet x);

bool is_spherical(const CoxeterGraph& g);

/// |W_Gamma|, saturating at uint64 max; 0 is never returned.
std::uint64_t group_order_saturated(const CoxeterGraph& g);
std::uint64_t spherical_type_order_saturated(const SphericalType& t);

/// True iff s and t are joined by a path using only odd-bond edges
/// (bond 3 included, infinity excluded).
bool odd_connected(const CoxeterGraph& g, int s, int t);

/// All label-preserving automorphisms of g, as vertex permutations.
std::vector<std::vector<int>> graph_automorphisms(const CoxeterGraph& g);

/// One labeled-graph embedding of the canonical graph of type t into g:
/// canon_to_vertex[i] is the g-vertex playing canonical s_{i+1}.
struct Placement {
  VertexSet subset;
  std::vector<int> canon_to_vertex;
};

/// Every induced embedding of the catalog graph of type t into g,
/// in deterministic order (subset-lex, then image sequence).
std::vector<Placement> find_placements(const CoxeterGraph& g,
                                       const SphericalType& t);

/// JSON graph file format:
///   {"vertices":["s1",...],"edges":[["s1","s2",4],...]}
/// Absent pairs default to bond 2; bond value "inf" encodes infinity;
/// an edge entry of two names means bond 3.
CoxeterGraph graph_from_json(const std::string& text);
std::string graph_to_json(const CoxeterGraph& g);

}  // namespace coxstab
