#include "coxstab/enumerate.hpp"

#include <array>
#include <cassert>
#include <unordered_set>

namespace coxstab {

namespace {

// 128-bit inversion-set key: bit i is set when positive root i is inverted.
// Uniquely identifies the element; valid while num_positive() <= 127.
struct Key128 {
  std::uint64_t lo{0}, hi{0};
  bool operator==(const Key128&) const = default;
};

constexpr Key128 kEmptySlot{~0ull, ~0ull};

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

/// Open-addressing set sized for multi-million BFS visited tables.
class KeySet {
 public:
  explicit KeySet(std::size_t expected) {
    std::size_t cap = 64;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kEmptySlot);
  }

  bool insert(Key128 k) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    return insert_no_grow(k);
  }

 private:
  bool insert_no_grow(Key128 k) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = (mix64(k.lo) ^ mix64(~k.hi)) & mask;
    while (!(slots_[i] == kEmptySlot)) {
      if (slots_[i] == k) return false;
      i = (i + 1) & mask;
    }
    slots_[i] = k;
    ++size_;
    return true;
  }

  void grow() {
    std::vector<Key128> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmptySlot);
    size_ = 0;
    for (const Key128& k : old) {
      if (!(k == kEmptySlot)) insert_no_grow(k);
    }
  }

  std::vector<Key128> slots_;
  std::size_t size_{0};
};

Key128 inversion_key(std::span<const std::uint16_t> perm, int n_pos) {
  Key128 k;
  for (int i = 0; i < n_pos; ++i) {
    if (perm[i] >= n_pos) {
      if (i < 64) {
        k.lo |= 1ull << i;
      } else {
        k.hi |= 1ull << (i - 64);
      }
    }
  }
  return k;
}

struct PermHash {
  std::size_t operator()(const RootPerm& p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint16_t x : p) h = mix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

template <typename Visited>
std::uint64_t bfs(const RootSystem& rs, std::uint64_t cap, Visited&& seen,
                  const std::function<void(std::span<const std::uint16_t>)>& visit) {
  const int n2 = rs.num_roots();
  const int rank = rs.rank();
  std::vector<std::span<const std::uint16_t>> gen(rank);
  std::vector<int> gen_alpha(rank);
  for (int s = 0; s < rank; ++s) {
    gen[s] = rs.simple_perm(s);
    gen_alpha[s] = rs.simple_root(s);
  }

  std::uint64_t count = 1;
  RootPerm id(n2);
  for (int i = 0; i < n2; ++i) id[i] = static_cast<std::uint16_t>(i);
  seen(id);
  if (cap < 1) throw CapExceededError("enumeration cap exceeded", count);
  visit(id);

  // Flat layer buffers: layer k holds all elements of length k.
  std::vector<std::uint16_t> cur(id.begin(), id.end());
  std::vector<std::uint16_t> next;
  RootPerm child(n2);
  const int n_pos = rs.num_positive();
  while (!cur.empty()) {
    next.clear();
    const std::size_t layer = cur.size() / n2;
    for (std::size_t e = 0; e < layer; ++e) {
      const std::uint16_t* p = cur.data() + e * n2;
      for (int s = 0; s < rank; ++s) {
        if (p[gen_alpha[s]] >= n_pos) continue;  // descent: already visited
        const auto& sp = gen[s];
        for (int i = 0; i < n2; ++i) child[i] = p[sp[i]];
        if (!seen(child)) continue;
        ++count;
        if (count > cap) {
          throw CapExceededError("enumeration cap exceeded", count);
        }
        visit(child);
        next.insert(next.end(), child.begin(), child.end());
      }
    }
    cur.swap(next);
  }
  return count;
}

}  // namespace

std::uint64_t for_each_element(
    const RootSystem& rs, std::uint64_t cap,
    const std::function<void(std::span<const std::uint16_t>)>& visit) {
  const int n_pos = rs.num_positive();
  if (n_pos <= 127) {
    KeySet set(1024);
    auto seen = [&](const RootPerm& p) {
      return set.insert(inversion_key(p, n_pos));
    };
    return bfs(rs, cap, seen, visit);
  }
  std::unordered_set<RootPerm, PermHash> set;
  auto seen = [&](const RootPerm& p) { return set.insert(p).second; };
  return bfs(rs, cap, seen, visit);
}

std::vector<GroupElement> enumerate_group(const RootSystem& rs,
                                          std::uint64_t cap) {
  std::vector<GroupElement> out;
  for_each_element(rs, cap, [&](std::span<const std::uint16_t> perm) {
    out.push_back(
        GroupElement::from_perm(rs, RootPerm(perm.begin(), perm.end())));
  });
  return out;
}

}  // namespace coxstab
