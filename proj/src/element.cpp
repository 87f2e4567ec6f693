#include "coxstab/element.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace coxstab {

Word word_from_names(const CoxeterGraph& g,
                     const std::vector<std::string>& letters) {
  Word w;
  w.reserve(letters.size());
  for (const auto& l : letters) {
    auto v = g.find_vertex(l);
    if (!v) throw UnknownLetterError("unknown letter: " + l);
    w.push_back(*v);
  }
  return w;
}

std::vector<std::string> word_names(const CoxeterGraph& g, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (int v : w) out.push_back(g.vertex_name(v));
  return out;
}

GroupElement::GroupElement(const RootSystem& rs, RootPerm perm)
    : rs_(&rs), perm_(std::move(perm)) {}

GroupElement GroupElement::identity(const RootSystem& rs) {
  RootPerm p(rs.num_roots());
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(rs, std::move(p));
}

GroupElement GroupElement::from_perm(const RootSystem& rs, RootPerm perm) {
  assert(static_cast<int>(perm.size()) == rs.num_roots());
  return GroupElement(rs, std::move(perm));
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

int GroupElement::length() const {
  const int n = rs_->num_positive();
  int inv = 0;
  for (int i = 0; i < n; ++i) {
    if (perm_[i] >= n) ++inv;
  }
  return inv;
}

GroupElement GroupElement::times_generator(int vertex) const {
  const auto s = rs_->simple_perm(vertex);
  RootPerm out(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = perm_[s[i]];
  return GroupElement(*rs_, std::move(out));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  RootPerm out(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = perm_[other.perm_[i]];
  return GroupElement(*rs_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  RootPerm out(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = static_cast<std::uint16_t>(i);
  return GroupElement(*rs_, std::move(out));
}

GroupElement evaluate_word(const RootSystem& rs, const Word& word) {
  for (int v : word) {
    if (v < 0 || v >= rs.rank()) {
      throw UnknownLetterError("letter index out of range");
    }
  }
  GroupElement w = GroupElement::identity(rs);
  for (int v : word) w = w.times_generator(v);
  return w;
}

Word reduced_word(const GroupElement& w) {
  const RootSystem& rs = w.root_system();
  const int n = rs.num_positive();
  Word out;
  // Strip left descents: s is one iff w^{-1}(alpha_s) is negative.
  GroupElement inv = w.inverse();
  while (true) {
    int s = -1;
    for (int v = 0; v < rs.rank(); ++v) {
      if (inv.apply(rs.simple_root(v)) >= n) {
        s = v;
        break;
      }
    }
    if (s < 0) break;
    out.push_back(s);
    inv = inv.times_generator(s);  // (s w)^{-1} = w^{-1} s
  }
  assert(inv.is_identity());
  return out;
}

GroupElement longest_element(const RootSystem& rs, VertexSet z) {
  GroupElement w = GroupElement::identity(rs);
  const auto verts = set_elements(z);
  while (true) {
    int s = -1;
    for (int v : verts) {
      if (w.right_ascent(v)) {
        s = v;
        break;
      }
    }
    if (s < 0) return w;
    w = w.times_generator(s);
  }
}

std::optional<int> simple_conjugate(const GroupElement& w, int y) {
  const RootSystem& rs = w.root_system();
  if (y < 0 || y >= rs.rank()) {
    throw UnknownVertexError("vertex index out of range");
  }
  // The reflection y^w has root w^{-1}(alpha_y).
  const int target = rs.simple_root(y);
  for (int i = 0; i < rs.num_roots(); ++i) {
    if (w.apply(i) == target) {
      const int v = rs.simple_of_root(i);
      return v >= 0 ? std::optional<int>(v) : std::nullopt;
    }
  }
  return std::nullopt;  // unreachable for a valid permutation
}

}  // namespace coxstab
