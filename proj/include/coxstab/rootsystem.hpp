#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coxstab/coxgraph.hpp"
#include "coxstab/golden.hpp"

namespace coxstab {

/// Permutation of root indices; perm[i] is the image of root i.
using RootPerm = std::vector<std::uint16_t>;

/// The reflection representation of a finite Coxeter group, realized as
/// permutations of the (finite) root set.
///
/// Roots are indexed 0..2N-1 with positives first: root i is positive iff
/// i < N, and -root(i) = i +- N. Per connected component of the graph:
///   - A/D/E, B/F: crystallographic roots with exact integer coordinates
///     (two root lengths for B/F),
///   - H3/H4: coordinates in the golden ring Z[phi],
///   - I2(m): the dihedral action on 2m abstract root indices (no vectors).
/// Components are built independently and concatenated; positive roots are
/// ordered simple-roots-first, then by closure depth, ties broken by exact
/// coordinate lexicographic order (by index for the abstract dihedral case).
class RootSystem {
 public:
  /// Throws NotSphericalError when any component fails recognition.
  explicit RootSystem(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  int num_positive() const { return npos_; }
  int num_roots() const { return 2 * npos_; }

  bool is_negative_root(int root) const { return root >= npos_; }
  int negate_root(int root) const {
    return root < npos_ ? root + npos_ : root - npos_;
  }

  /// Root index of alpha_s for vertex s; always < num_positive().
  int simple_root(int vertex) const { return simple_root_[vertex]; }
  /// Vertex s such that root == +-alpha_s, or -1.
  int simple_of_root(int root) const {
    return simple_of_root_[root < npos_ ? root : root - npos_];
  }

  std::span<const std::uint16_t> simple_perm(int vertex) const {
    return simple_perm_[vertex];
  }

  /// Exact coordinates of a positive root in the simple-root basis of its
  /// component; empty for roots of dihedral components.
  const std::vector<Golden>& root_coords(int positive_root) const {
    return coords_[positive_root];
  }
  /// Vertices of the component that owns this root.
  VertexSet root_component(int root) const {
    return component_of_[root < npos_ ? root : root - npos_];
  }

 private:
  CoxeterGraph graph_;
  int npos_{0};
  std::vector<RootPerm> simple_perm_;     // per vertex
  std::vector<int> simple_root_;          // per vertex
  std::vector<int> simple_of_root_;       // per positive root
  std::vector<std::vector<Golden>> coords_;
  std::vector<VertexSet> component_of_;
};

}  // namespace coxstab
