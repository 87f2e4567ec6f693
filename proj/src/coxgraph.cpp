#include "coxstab/coxgraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coxstab {

int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_elements(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; s != 0; ++v, s >>= 1) {
    if (s & 1u) out.push_back(v);
  }
  return out;
}

VertexSet set_from(const std::vector<int>& elements) {
  VertexSet s = 0;
  for (int v : elements) s = set_with(s, v);
  return s;
}

bool subset_lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  // Walk common low elements; the first differing element decides, with the
  // convention that a proper prefix sorts first.
  while (a != 0 && b != 0) {
    const int va = std::countr_zero(a);
    const int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a = set_without(a, va);
    b = set_without(b, vb);
  }
  return a == 0;
}

std::string SphericalType::name() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(rank);
    case Family::B:
      return "B" + std::to_string(rank);
    case Family::D:
      return "D" + std::to_string(rank);
    case Family::E:
      return "E" + std::to_string(rank);
    case Family::F:
      return "F4";
    case Family::H:
      return "H" + std::to_string(rank);
    case Family::I2:
      return "I2(" + std::to_string(i2_bond) + ")";
  }
  return "?";
}

namespace {

CoxeterGraph build_catalog(Family family, int rank, int i2_bond) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (int i = 1; i <= rank; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  auto edge = [&](int i, int j, int label) {
    m[i][j] = label;
    m[j][i] = label;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      edge(0, 1, 4);
      for (int i = 1; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case Family::D:
      edge(0, 2, 3);
      edge(1, 2, 3);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case Family::E:
      edge(0, 2, 3);
      edge(1, 3, 3);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case Family::F:
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case Family::H:
      edge(0, 1, 5);
      for (int i = 1; i + 1 < rank; ++i) edge(i, i + 1, 3);
      break;
    case Family::I2:
      edge(0, 1, i2_bond);
      break;
  }
  return CoxeterGraph::from_matrix(m, std::move(names));
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace

CoxeterGraph CoxeterGraph::from_name(std::string_view name) {
  const auto fail = [&]() -> CoxeterGraph {
    throw UnknownTypeError("unknown spherical type name: " +
                           std::string(name));
  };
  if (name == "G2") return build_catalog(Family::I2, 2, 6);
  if (name.size() < 2) return fail();
  const char fam = name[0];
  std::string_view rest = name.substr(1);
  int n = 0;
  switch (fam) {
    case 'A':
      if (!parse_int(rest, n) || n < 1) return fail();
      return build_catalog(Family::A, n, 0);
    case 'B':
      if (!parse_int(rest, n) || n < 2) return fail();
      return build_catalog(Family::B, n, 0);
    case 'D':
      if (!parse_int(rest, n) || n < 4) return fail();
      return build_catalog(Family::D, n, 0);
    case 'E':
      if (!parse_int(rest, n) || n < 6 || n > 8) return fail();
      return build_catalog(Family::E, n, 0);
    case 'F':
      if (rest != "4") return fail();
      return build_catalog(Family::F, 4, 0);
    case 'H':
      if (!parse_int(rest, n) || n < 3 || n > 4) return fail();
      return build_catalog(Family::H, n, 0);
    case 'I': {
      if (rest.size() < 4 || rest.substr(0, 2) != "2(" ||
          rest.back() != ')') {
        return fail();
      }
      int m = 0;
      if (!parse_int(rest.substr(2, rest.size() - 3), m) || m < 5) {
        return fail();
      }
      return build_catalog(Family::I2, 2, m);
    }
    default:
      return fail();
  }
}

CoxeterGraph CoxeterGraph::from_matrix(const std::vector<std::vector<int>>& m,
                                       std::vector<std::string> names) {
  const std::size_t n = m.size();
  if (names.size() != n) {
    throw BadEntryError("matrix size and vertex list size differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw BadEntryError("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) throw BadDiagonalError("diagonal entry must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw NotSymmetricError("matrix is not symmetric");
      }
      if (m[i][j] < 2) {
        throw BadEntryError("off-diagonal entry must be >= 2");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (names[i] == names[j] && i != j) {
        throw BadEntryError("duplicate vertex name: " + names[i]);
      }
    }
  }
  CoxeterGraph g;
  g.names_ = std::move(names);
  g.matrix_ = m;
  return g;
}

int CoxeterGraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownVertexError("unknown vertex: " + std::string(name));
}

std::optional<int> CoxeterGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

VertexSet CoxeterGraph::parse_subset(
    const std::vector<std::string>& names) const {
  VertexSet s = 0;
  for (const auto& n : names) s = set_with(s, vertex_index(n));
  return s;
}

std::vector<std::string> CoxeterGraph::subset_names(VertexSet s) const {
  std::vector<std::string> out;
  for (int v : set_elements(s)) out.push_back(vertex_name(v));
  return out;
}

CoxeterGraph CoxeterGraph::induced(VertexSet x) const {
  if (rank() < 64 && (x >> rank()) != 0) {
    throw UnknownVertexError("subset contains vertices outside the graph");
  }
  const auto verts = set_elements(x);
  CoxeterGraph g;
  for (int v : verts) g.names_.push_back(names_[v]);
  const std::size_t k = verts.size();
  g.matrix_.assign(k, std::vector<int>(k, 2));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      g.matrix_[i][j] = matrix_[verts[i]][verts[j]];
    }
  }
  return g;
}

bool CoxeterGraph::adjacent_to_set(int t, VertexSet z) const {
  for (int v : set_elements(z)) {
    if (adjacent(t, v)) return true;
  }
  return false;
}

std::vector<VertexSet> CoxeterGraph::connected_components() const {
  return components_within(full_set(rank()));
}

std::vector<VertexSet> CoxeterGraph::components_within(VertexSet x) const {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (int v : set_elements(x)) {
    if (set_contains(seen, v)) continue;
    VertexSet comp = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (set_contains(comp, u)) continue;
      comp = set_with(comp, u);
      for (int w : set_elements(x)) {
        if (!set_contains(comp, w) && adjacent(u, w)) stack.push_back(w);
      }
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

VertexSet ComponentType::support() const { return set_from(canon_to_vertex); }

std::string Recognition::type_name() const {
  if (!spherical) return "not spherical";
  if (components.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " x ";
    out += components[i].type.name();
  }
  return out;
}

namespace {

// Orientation choice for symmetric catalog graphs: the candidate whose
// canonical-order vertex sequence is lexicographically smallest wins.
bool seq_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Recognizes one connected component (vertex list sorted ascending).
/// Returns nullopt when the component matches no catalog graph.
std::optional<ComponentType> recognize_component(const CoxeterGraph& g,
                                                 const std::vector<int>& vs) {
  const int n = static_cast<int>(vs.size());
  for (int a : vs) {
    for (int b : vs) {
      if (a < b && g.bond(a, b) == kInfiniteBond) return std::nullopt;
    }
  }
  if (n == 1) {
    return ComponentType{SphericalType{Family::A, 1, 0}, {vs[0]}};
  }
  if (n == 2) {
    const int m = g.bond(vs[0], vs[1]);
    SphericalType t;
    if (m == 3) {
      t = {Family::A, 2, 0};
    } else if (m == 4) {
      t = {Family::B, 2, 0};
    } else {
      t = {Family::I2, 2, m};
    }
    return ComponentType{t, {vs[0], vs[1]}};  // lex-min of the two labelings
  }

  // n >= 3: the component must be a tree with at most one degree-3 vertex.
  int edge_count = 0;
  std::vector<std::vector<int>> nbr(n);
  std::vector<int> pos(g.rank(), -1);
  for (int i = 0; i < n; ++i) pos[vs[i]] = i;
  int special_edges = 0;       // edges with bond >= 4
  int special_label = 0;
  std::pair<int, int> special_edge{-1, -1};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = g.bond(vs[i], vs[j]);
      if (m >= 3) {
        ++edge_count;
        nbr[i].push_back(j);
        nbr[j].push_back(i);
        if (m >= 4) {
          ++special_edges;
          special_label = m;
          special_edge = {i, j};
        }
      }
    }
  }
  if (edge_count != n - 1) return std::nullopt;  // has a cycle
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (nbr[i].size() > 3) return std::nullopt;
    if (nbr[i].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = i;
    }
  }

  if (branch >= 0) {
    if (special_edges > 0) return std::nullopt;
    // Walk the three arms away from the branch vertex.
    std::vector<std::vector<int>> arms;  // local indices, branch excluded
    for (int start : nbr[branch]) {
      std::vector<int> arm{start};
      int prev = branch, cur = start;
      while (true) {
        int next = -1;
        for (int w : nbr[cur]) {
          if (w != prev) next = w;
        }
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const auto a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    const auto local_to_vertex = [&](const std::vector<int>& canon_local) {
      std::vector<int> out;
      out.reserve(canon_local.size());
      for (int l : canon_local) out.push_back(vs[l]);
      return out;
    };
    if (a == 1 && b == 1) {
      // D_{c+3}: fork ends s1,s2 at s3 = branch, chain s4..s_n outward.
      const int rank = static_cast<int>(c) + 3;
      std::vector<int> canon;
      // Candidate fork assignments: for D4 all three length-1 arms compete.
      std::vector<std::vector<int>> candidates;
      if (c == 1) {
        const int l0 = arms[0][0], l1 = arms[1][0], l2 = arms[2][0];
        for (auto [x, y, z] : {std::array{l0, l1, l2}, std::array{l0, l2, l1},
                               std::array{l1, l2, l0}, std::array{l1, l0, l2},
                               std::array{l2, l0, l1}, std::array{l2, l1, l0}}) {
          candidates.push_back({x, y, branch, z});
        }
      } else {
        for (bool swap : {false, true}) {
          std::vector<int> cand{arms[swap ? 1 : 0][0], arms[swap ? 0 : 1][0],
                                branch};
          for (int l : arms[2]) cand.push_back(l);
          candidates.push_back(std::move(cand));
        }
      }
      std::vector<int> best;
      for (const auto& cand : candidates) {
        auto mapped = local_to_vertex(cand);
        if (best.empty() || seq_less(mapped, best)) best = std::move(mapped);
      }
      return ComponentType{SphericalType{Family::D, rank, 0}, best};
    }
    if (a == 1 && b == 2 && c >= 2 && c <= 4) {
      // E_{c+4}: branch = s4, 1-arm = s2, 2-arm = (s3, s1), long arm = s5...
      const int rank = static_cast<int>(c) + 4;
      std::vector<std::vector<int>> candidates;
      const auto make = [&](const std::vector<int>& two_arm,
                            const std::vector<int>& long_arm) {
        std::vector<int> cand{two_arm[1], arms[0][0], two_arm[0], branch};
        for (int l : long_arm) cand.push_back(l);
        return cand;
      };
      candidates.push_back(make(arms[1], arms[2]));
      if (b == c) candidates.push_back(make(arms[2], arms[1]));  // E6 flip
      std::vector<int> best;
      for (const auto& cand : candidates) {
        auto mapped = local_to_vertex(cand);
        if (best.empty() || seq_less(mapped, best)) best = std::move(mapped);
      }
      return ComponentType{SphericalType{Family::E, rank, 0}, best};
    }
    return std::nullopt;
  }

  // Path graph. Order the vertices along the path from one endpoint.
  int end = -1;
  for (int i = 0; i < n; ++i) {
    if (nbr[i].size() == 1) end = i;
  }
  std::vector<int> path{end};
  int prev = -1, cur = end;
  while (static_cast<int>(path.size()) < n) {
    int next = -1;
    for (int w : nbr[cur]) {
      if (w != prev) next = w;
    }
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  const auto path_vertices = [&](bool reversed) {
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
      out.push_back(vs[path[reversed ? n - 1 - i : i]]);
    }
    return out;
  };
  if (special_edges == 0) {
    auto fwd = path_vertices(false), rev = path_vertices(true);
    return ComponentType{SphericalType{Family::A, n, 0},
                         seq_less(fwd, rev) ? fwd : rev};
  }
  if (special_edges > 1) return std::nullopt;
  // Position of the special edge along the path (1 = incident to path[0]).
  int edge_pos = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if ((path[i] == special_edge.first && path[i + 1] == special_edge.second) ||
        (path[i] == special_edge.second && path[i + 1] == special_edge.first)) {
      edge_pos = i + 1;
    }
  }
  const int folded = std::min(edge_pos, n - edge_pos);
  if (special_label == 4) {
    if (folded == 1) {
      // B_n with the 4-bond on s1-s2.
      return ComponentType{SphericalType{Family::B, n, 0},
                           path_vertices(edge_pos != 1)};
    }
    if (folded == 2 && n == 4) {
      auto fwd = path_vertices(false), rev = path_vertices(true);
      return ComponentType{SphericalType{Family::F, 4, 0},
                           seq_less(fwd, rev) ? fwd : rev};
    }
    return std::nullopt;
  }
  if (special_label == 5 && folded == 1 && (n == 3 || n == 4)) {
    return ComponentType{SphericalType{Family::H, n, 0},
                         path_vertices(edge_pos != 1)};
  }
  return std::nullopt;
}

}  // namespace

Recognition recognize_within(const CoxeterGraph& g, VertexSet x) {
  Recognition rec;
  rec.spherical = true;
  for (VertexSet comp : g.components_within(x)) {
    auto ct = recognize_component(g, set_elements(comp));
    if (!ct) {
      rec.spherical = false;
      rec.components.clear();
      return rec;
    }
    rec.components.push_back(std::move(*ct));
  }
  return rec;
}

Recognition recognize(const CoxeterGraph& g) {
  return recognize_within(g, full_set(g.rank()));
}

bool is_spherical(const CoxeterGraph& g) { return recognize(g).spherical; }

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::uint64_t spherical_type_order_saturated(const SphericalType& t) {
  std::uint64_t order = 1;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= t.rank + 1; ++i) order = sat_mul(order, i);
      return order;
    case Family::B:
      for (int i = 1; i <= t.rank; ++i) order = sat_mul(order, 2 * i);
      return order;
    case Family::D:
      for (int i = 1; i <= t.rank; ++i) order = sat_mul(order, i);
      for (int i = 0; i < t.rank - 1; ++i) order = sat_mul(order, 2);
      return order;
    case Family::E:
      return t.rank == 6 ? 51840u
                         : (t.rank == 7 ? 2903040u : 696729600u);
    case Family::F:
      return 1152;
    case Family::H:
      return t.rank == 3 ? 120 : 14400;
    case Family::I2:
      return 2 * static_cast<std::uint64_t>(t.i2_bond);
  }
  return order;
}

std::uint64_t group_order_saturated(const CoxeterGraph& g) {
  const Recognition rec = recognize(g);
  if (!rec.spherical) {
    throw NotSphericalError("group order requested for non-spherical graph");
  }
  std::uint64_t order = 1;
  for (const auto& c : rec.components) {
    order = sat_mul(order, spherical_type_order_saturated(c.type));
  }
  return order;
}

bool odd_connected(const CoxeterGraph& g, int s, int t) {
  if (s < 0 || s >= g.rank() || t < 0 || t >= g.rank()) {
    throw UnknownVertexError("vertex index out of range");
  }
  std::vector<int> stack{s};
  VertexSet seen = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (set_contains(seen, u)) continue;
    seen = set_with(seen, u);
    if (u == t) return true;
    for (int w = 0; w < g.rank(); ++w) {
      const int m = g.bond(u, w);
      if (w != u && m >= 3 && m != kInfiniteBond && m % 2 == 1 &&
          !set_contains(seen, w)) {
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<std::vector<int>> graph_automorphisms(const CoxeterGraph& g) {
  const int n = g.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        ok = g.bond(i, j) == g.bond(perm[i], perm[j]);
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Placement> find_placements(const CoxeterGraph& g,
                                       const SphericalType& t) {
  std::vector<Placement> out;
  const int r = t.rank;
  if (r > g.rank()) return out;
  const CoxeterGraph canon = CoxeterGraph::from_name(t.name());
  const auto autos = graph_automorphisms(canon);
  // Iterate subsets of size r in subset-lex order.
  std::vector<VertexSet> subsets;
  for (VertexSet x = 1; x < full_set(g.rank()) + (g.rank() < 64 ? 1u : 0u);
       ++x) {
    if (set_size(x) == r) subsets.push_back(x);
  }
  std::sort(subsets.begin(), subsets.end(), subset_lex_less);
  for (VertexSet x : subsets) {
    const Recognition rec = recognize_within(g, x);
    if (!rec.spherical || rec.components.size() != 1) continue;
    if (!(rec.components[0].type == t)) continue;
    const auto& base = rec.components[0].canon_to_vertex;
    std::vector<std::vector<int>> images;
    for (const auto& a : autos) {
      std::vector<int> img(r);
      for (int i = 0; i < r; ++i) img[i] = base[a[i]];
      images.push_back(std::move(img));
    }
    std::sort(images.begin(), images.end());
    for (auto& img : images) out.push_back(Placement{x, std::move(img)});
  }
  return out;
}

CoxeterGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i] == name) return i;
    }
    throw UnknownVertexError("edge mentions unknown vertex: " + name);
  };
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw BadEntryError("edge entries must be [u, v] or [u, v, label]");
      }
      const std::size_t a = index_of(e[0].get<std::string>());
      const std::size_t b = index_of(e[1].get<std::string>());
      if (a == b) throw BadEntryError("self-loop edge");
      int label = 3;
      if (e.size() == 3) {
        if (e[2].is_string()) {
          if (e[2].get<std::string>() != "inf") {
            throw BadEntryError("edge label must be an integer or \"inf\"");
          }
          label = kInfiniteBond;
        } else {
          label = e[2].get<int>();
          if (label < 3) throw BadEntryError("edge label must be >= 3");
        }
      }
      m[a][b] = label;
      m[b][a] = label;
    }
  }
  return CoxeterGraph::from_matrix(m, std::move(names));
}

std::string graph_to_json(const CoxeterGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_names();
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < g.rank(); ++i) {
    for (int k = i + 1; k < g.rank(); ++k) {
      const int m = g.bond(i, k);
      if (m < 3) continue;
      nlohmann::json e = {g.vertex_name(i), g.vertex_name(k)};
      if (m == kInfiniteBond) {
        e.push_back("inf");
      } else {
        e.push_back(m);
      }
      edges.push_back(std::move(e));
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace coxstab
