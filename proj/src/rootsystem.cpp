#include "coxstab/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace coxstab {

namespace {

struct ComponentRoots {
  int n_pos{0};
  // Local layout: positives [0, n_pos), negatives [n_pos, 2*n_pos) with
  // -root(i) = i +- n_pos.
  std::vector<RootPerm> perms;      // per local generator
  std::vector<int> simple_local;    // per local generator: local root index
  std::vector<std::vector<Golden>> coords;  // per local positive root
};

/// Closure of the simple roots under the reflections, for one connected
/// vector-type component. `cartan[i][j]` is the pairing <alpha_j, alpha_i*>.
ComponentRoots build_vector_component(
    const std::vector<std::vector<Golden>>& cartan) {
  const int k = static_cast<int>(cartan.size());
  using Vec = std::vector<Golden>;
  std::vector<Vec> roots;
  std::map<Vec, int> index;
  std::vector<int> depth;
  const auto add = [&](const Vec& v, int d) -> int {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(roots.size());
    roots.push_back(v);
    index.emplace(v, id);
    depth.push_back(d);
    return id;
  };
  for (int i = 0; i < k; ++i) {
    Vec v(k, Golden{0});
    v[i] = Golden{1};
    add(v, 0);
  }
  const auto reflect = [&](int gen, const Vec& v) {
    // s_i(v) = v - <v, alpha_i*> alpha_i
    Golden pairing{0};
    for (int j = 0; j < k; ++j) pairing = pairing + cartan[gen][j] * v[j];
    Vec out = v;
    out[gen] = out[gen] - pairing;
    return out;
  };
  for (std::size_t head = 0; head < roots.size(); ++head) {
    const Vec v = roots[head];
    for (int g = 0; g < k; ++g) {
      add(reflect(g, v), depth[head] + 1);
    }
    if (roots.size() > 20000) {
      throw NotSphericalError("root closure did not terminate");
    }
  }

  const int total = static_cast<int>(roots.size());
  assert(total % 2 == 0);
  const int n_pos = total / 2;
  // Separate positives (all coordinates >= 0) and order them.
  std::vector<int> positives;
  for (int i = 0; i < total; ++i) {
    const bool nonneg = std::all_of(roots[i].begin(), roots[i].end(),
                                    [](Golden c) { return c.is_nonnegative(); });
    if (nonneg) positives.push_back(i);
  }
  assert(static_cast<int>(positives.size()) == n_pos);
  std::sort(positives.begin(), positives.end(), [&](int x, int y) {
    if (depth[x] != depth[y]) return depth[x] < depth[y];
    return roots[x] < roots[y];
  });

  // old index -> final local index
  std::vector<int> relabel(total, -1);
  const auto negate_vec = [&](const Vec& v) {
    Vec out = v;
    for (auto& c : out) c = -c;
    return out;
  };
  for (int p = 0; p < n_pos; ++p) {
    relabel[positives[p]] = p;
    relabel[index.at(negate_vec(roots[positives[p]]))] = p + n_pos;
  }

  ComponentRoots out;
  out.n_pos = n_pos;
  out.perms.assign(k, RootPerm(total));
  for (int g = 0; g < k; ++g) {
    for (int i = 0; i < total; ++i) {
      const int img = index.at(reflect(g, roots[i]));
      out.perms[g][relabel[i]] = static_cast<std::uint16_t>(relabel[img]);
    }
  }
  out.simple_local.resize(k);
  for (int g = 0; g < k; ++g) out.simple_local[g] = relabel[g];
  out.coords.resize(n_pos);
  for (int p = 0; p < n_pos; ++p) out.coords[p] = roots[positives[p]];
  return out;
}

/// Dihedral component I2(m): 2m abstract roots on a cycle of half-angles.
/// In the raw indexing, generator s reflects k -> m-k and t reflects
/// k -> 3m-2-k (mod 2m); positives are 0..m-1 with alpha_s = 0 and
/// alpha_t = m-1. Roots are then reordered simple-roots-first.
ComponentRoots build_dihedral_component(int m) {
  const int total = 2 * m;
  const auto s_act = [&](int k) { return ((m - k) % total + total) % total; };
  const auto t_act = [&](int k) {
    return ((3 * m - 2 - k) % total + total) % total;
  };
  // Closure depth of each raw root from the simple pair.
  std::vector<int> depth(total, -1);
  depth[0] = 0;
  depth[m - 1] = 0;
  std::vector<int> frontier{0, m - 1};
  int d = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int k : frontier) {
      for (int img : {s_act(k), t_act(k)}) {
        if (depth[img] < 0) {
          depth[img] = d + 1;
          next.push_back(img);
        }
      }
    }
    frontier = std::move(next);
    ++d;
  }
  std::vector<int> positives(m);
  for (int i = 0; i < m; ++i) positives[i] = i;
  std::sort(positives.begin(), positives.end(), [&](int x, int y) {
    const bool sx = (x == 0 || x == m - 1), sy = (y == 0 || y == m - 1);
    if (sx != sy) return sx;
    if (sx && sy) return x == 0;  // alpha_s before alpha_t
    if (depth[x] != depth[y]) return depth[x] < depth[y];
    return x < y;
  });
  std::vector<int> relabel(total, -1);
  for (int p = 0; p < m; ++p) {
    relabel[positives[p]] = p;
    relabel[(positives[p] + m) % total] = p + m;
  }
  ComponentRoots out;
  out.n_pos = m;
  out.perms.assign(2, RootPerm(total));
  for (int k = 0; k < total; ++k) {
    out.perms[0][relabel[k]] = static_cast<std::uint16_t>(relabel[s_act(k)]);
    out.perms[1][relabel[k]] = static_cast<std::uint16_t>(relabel[t_act(k)]);
  }
  out.simple_local = {relabel[0], relabel[m - 1]};
  out.coords.assign(m, {});
  return out;
}

ComponentRoots build_component(const CoxeterGraph& g,
                               const std::vector<int>& verts,
                               const SphericalType& type) {
  if (type.family == Family::I2) {
    return build_dihedral_component(type.i2_bond);
  }
  const int k = static_cast<int>(verts.size());
  std::vector<std::vector<Golden>> cartan(k, std::vector<Golden>(k, Golden{0}));
  for (int i = 0; i < k; ++i) cartan[i][i] = Golden{2};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const int m = g.bond(verts[i], verts[j]);
      if (m == 2) continue;
      if (m == 3) {
        cartan[i][j] = Golden{-1};
      } else if (m == 4) {
        // Crystallographic two-length pairing; orientation pinned by vertex
        // order (<alpha_j, alpha_i*> = -2 for i < j).
        cartan[i][j] = (i < j) ? Golden{-2} : Golden{-1};
      } else if (m == 5) {
        cartan[i][j] = Golden{0, -1};  // -phi = -2 cos(pi/5)
      } else {
        throw NotSphericalError("unsupported bond in vector component");
      }
    }
  }
  return build_vector_component(cartan);
}

}  // namespace

RootSystem::RootSystem(CoxeterGraph graph) : graph_(std::move(graph)) {
  const Recognition rec = recognize(graph_);
  if (!rec.spherical) {
    throw NotSphericalError("root system requested for non-spherical graph");
  }
  if (graph_.rank() > 64) {
    throw NotSphericalError("rank > 64 is not supported");
  }

  struct Block {
    std::vector<int> verts;
    ComponentRoots roots;
    int offset;  // global index of first positive root
  };
  std::vector<Block> blocks;
  int npos = 0;
  for (const auto& comp : rec.components) {
    Block b;
    b.verts = set_elements(comp.support());
    b.roots = build_component(graph_, b.verts, comp.type);
    b.offset = npos;
    npos += b.roots.n_pos;
    blocks.push_back(std::move(b));
  }
  npos_ = npos;
  if (2 * npos_ > 65535) {
    throw NotSphericalError("root system too large for 16-bit indices");
  }

  simple_perm_.assign(graph_.rank(), RootPerm(2 * npos_));
  // Every generator fixes the roots of other components.
  for (auto& p : simple_perm_) {
    for (int i = 0; i < 2 * npos_; ++i) p[i] = static_cast<std::uint16_t>(i);
  }
  simple_root_.assign(graph_.rank(), -1);
  simple_of_root_.assign(npos_, -1);
  coords_.assign(npos_, {});
  component_of_.assign(npos_, 0);

  for (const auto& b : blocks) {
    const int p = b.roots.n_pos;
    const auto to_global = [&](int local) {
      return local < p ? b.offset + local : npos_ + b.offset + (local - p);
    };
    for (std::size_t gi = 0; gi < b.verts.size(); ++gi) {
      const int vertex = b.verts[gi];
      auto& perm = simple_perm_[vertex];
      for (int local = 0; local < 2 * p; ++local) {
        perm[to_global(local)] = static_cast<std::uint16_t>(
            to_global(b.roots.perms[gi][local]));
      }
      const int sl = b.roots.simple_local[gi];
      simple_root_[vertex] = to_global(sl);
      simple_of_root_[to_global(sl)] = vertex;
    }
    const VertexSet support = set_from(b.verts);
    for (int local = 0; local < p; ++local) {
      coords_[b.offset + local] = b.roots.coords[local];
      component_of_[b.offset + local] = support;
    }
  }
}

}  // namespace coxstab
