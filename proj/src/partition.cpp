#include "f1m/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace f1m {
namespace {

void sort_blocks(std::vector<Mask>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Partition partition_from_roots(int m, UnionFind& uf, int offset) {
  std::vector<Mask> by_root(static_cast<std::size_t>(offset + m + 1), 0);
  Partition out{m, {}};
  for (int e = 0; e <= m; ++e) by_root[static_cast<std::size_t>(uf.find(offset + e))] |= Mask{1} << e;
  for (Mask b : by_root)
    if (b) out.blocks.push_back(b);
  sort_blocks(out.blocks);
  return out;
}

}  // namespace

bool is_valid_partition(const Partition& p) {
  if (p.n < 0 || p.n > kMaxAmbient) return false;
  const Mask full = (Mask{1} << (p.n + 1)) - 1;
  Mask seen = 0;
  for (Mask b : p.blocks) {
    if (b == 0 || (b & seen) || (b & ~full)) return false;
    seen |= b;
  }
  if (seen != full) return false;
  for (std::size_t i = 1; i < p.blocks.size(); ++i)
    if (std::countr_zero(p.blocks[i - 1]) > std::countr_zero(p.blocks[i])) return false;
  return true;
}

Partition all_singletons(int n) {
  Partition p{n, {}};
  for (int e = 0; e <= n; ++e) p.blocks.push_back(Mask{1} << e);
  return p;
}

Partition partition_from_labels(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("partition_from_labels: empty");
  int k = *std::max_element(labels.begin(), labels.end());
  Partition p{static_cast<int>(labels.size()) - 1, std::vector<Mask>(static_cast<std::size_t>(k), 0)};
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (labels[e] < 1 || labels[e] > k) throw std::invalid_argument("partition_from_labels: bad label");
    p.blocks[static_cast<std::size_t>(labels[e] - 1)] |= Mask{1} << e;
  }
  sort_blocks(p.blocks);
  if (!is_valid_partition(p)) throw std::invalid_argument("partition_from_labels: not a partition");
  return p;
}

std::vector<int> partition_to_labels(const Partition& p) {
  std::vector<int> labels(static_cast<std::size_t>(p.n) + 1, 0);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (int e = 0; e <= p.n; ++e)
      if ((p.blocks[i] >> e) & 1u) labels[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
  return labels;
}

Partition part_map(const PointedMap& phi, const Partition& p) {
  if (phi.src != p.n) throw std::invalid_argument("part_map: ambient mismatch");
  UnionFind uf(phi.dst + 1);
  for (Mask b : p.blocks) {
    int first = -1;
    for (int e = 0; e <= p.n; ++e) {
      if (!((b >> e) & 1u)) continue;
      int v = phi.table[static_cast<std::size_t>(e)];
      if (first < 0) first = v;
      else uf.unite(first, v);
    }
  }
  return partition_from_roots(phi.dst, uf, 0);
}

Partition part_map_pushout(const PointedMap& phi, const Partition& p) {
  if (phi.src != p.n) throw std::invalid_argument("part_map_pushout: ambient mismatch");
  std::vector<int> pi = partition_to_labels(p);  // surjection <n> ->> {1..k}
  const int k = static_cast<int>(p.blocks.size());
  // coequalizer of {1..k} <<- <n> -> <m> via union-find on the disjoint sum
  UnionFind uf(k + phi.dst + 1);
  for (int x = 0; x <= p.n; ++x)
    uf.unite(pi[static_cast<std::size_t>(x)] - 1, k + phi.table[static_cast<std::size_t>(x)]);
  return partition_from_roots(phi.dst, uf, k);
}

DynkinSystem sigma_embedding(const Partition& p) {
  if (!is_valid_partition(p)) throw std::invalid_argument("sigma_embedding: invalid partition");
  DynkinSystem d{p.n, SetFamily(p.n + 1)};
  const std::size_t k = p.blocks.size();
  for (Mask j = 0; j < (Mask{1} << k); ++j) {
    Mask m = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((j >> i) & 1u) m |= p.blocks[i];
    d.family.set(m);
  }
  return d;
}

Partition atoms(const DynkinSystem& x) {
  if (!is_intersection_closed(x)) throw std::invalid_argument("atoms: not intersection-closed");
  const Mask full = (Mask{1} << (x.n + 1)) - 1;
  std::vector<Mask> mem = x.family.members();
  Partition p{x.n, {}};
  Mask covered = 0;
  for (int e = 0; e <= x.n; ++e) {
    if ((covered >> e) & 1u) continue;
    Mask atom = full;
    for (Mask a : mem)
      if ((a >> e) & 1u) atom &= a;
    p.blocks.push_back(atom);
    covered |= atom;
  }
  sort_blocks(p.blocks);
  if (!is_valid_partition(p)) throw std::invalid_argument("atoms: members do not generate a partition");
  return p;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& emit) {
  if (n < 0 || n > 12) throw std::invalid_argument("for_each_partition: n out of range");
  std::vector<int> rgs(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i, int maxlbl) -> void {
    if (i > n) {
      std::vector<int> labels(rgs.size());
      for (std::size_t j = 0; j < rgs.size(); ++j) labels[j] = rgs[j] + 1;
      emit(partition_from_labels(labels));
      return;
    }
    for (int v = 0; v <= maxlbl + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(maxlbl, v));
    }
  };
  rec(rec, 1, 0);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_partitions(int n) {
  std::uint64_t c = 0;
  for_each_partition(n, [&](const Partition&) { ++c; });
  return c;
}

}  // namespace f1m
