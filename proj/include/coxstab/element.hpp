#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxstab/rootsystem.hpp"

namespace coxstab {

/// A word over the generators, as vertex indices of the ambient graph.
using Word = std::vector<int>;

Word word_from_names(const CoxeterGraph& g,
                     const std::vector<std::string>& letters);
std::vector<std::string> word_names(const CoxeterGraph& g, const Word& w);

/// An element of a finite Coxeter group, stored as its permutation of the
/// root set. Immutable value type; length is the inversion count.
class GroupElement {
 public:
  static GroupElement identity(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int apply(int root) const { return perm_[root]; }

  bool is_identity() const;
  int length() const;

  /// w * s for a generator s (vertex index).
  GroupElement times_generator(int vertex) const;
  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;

  /// True iff l(w s) > l(w).
  bool right_ascent(int vertex) const {
    return perm_[rs_->simple_root(vertex)] < rs_->num_positive();
  }

  bool operator==(const GroupElement& other) const {
    return perm_ == other.perm_;
  }

  const RootPerm& perm() const { return perm_; }
  static GroupElement from_perm(const RootSystem& rs, RootPerm perm);

 private:
  GroupElement(const RootSystem& rs, RootPerm perm);
  const RootSystem* rs_;
  RootPerm perm_;
};

/// Product of simple reflections, letters applied left to right.
/// Throws UnknownLetterError for out-of-range letters.
GroupElement evaluate_word(const RootSystem& rs, const Word& word);

/// Reduced word by greedy left descent (smallest vertex index first);
/// evaluate_word(reduced_word(w)) == w and its size equals length(w).
Word reduced_word(const GroupElement& w);

/// Longest element of the standard parabolic W_Z, by greedy length ascent
/// inside Z. An involution; conjugation by it maps Z onto Z.
GroupElement longest_element(const RootSystem& rs, VertexSet z);

/// The vertex t with y^w = t when w^{-1} alpha_y is +-alpha_t; nullopt when
/// the conjugated reflection is not simple.
std::optional<int> simple_conjugate(const GroupElement& w, int y);

}  // namespace coxstab
