#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "f1m/dynkin.hpp"
#include "f1m/finset.hpp"

namespace f1m {

/// Set partition of the pointed set <n>: pairwise disjoint nonempty blocks
/// (pointed masks) covering {0..n}, sorted by minimum element.
struct Partition {
  int n = 0;
  std::vector<Mask> blocks;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const {
    return n != o.n ? n < o.n : blocks < o.blocks;
  }
};

bool is_valid_partition(const Partition& p);
Partition all_singletons(int n);

/// Partition <-> surjection <n> ->> {1..k}; labels are assigned in order of
/// first appearance, so labels[0] == 1.
Partition partition_from_labels(const std::vector<int>& labels);
std::vector<int> partition_to_labels(const Partition& p);

/// Induced partition along phi, by union-find closure of the block images.
Partition part_map(const PointedMap& phi, const Partition& p);

/// Same function computed as a pushout (coequalizer) of the associated
/// surjection with phi.
Partition part_map_pushout(const PointedMap& phi, const Partition& p);

/// The sigma-algebra generated by the blocks: all unions of blocks. The
/// result is an intersection-closed Dynkin system with atoms(p) == p.
DynkinSystem sigma_embedding(const Partition& p);

/// Minimal nonempty members of an intersection-closed Dynkin system.
Partition atoms(const DynkinSystem& x);

/// All partitions of {0..n} by restricted-growth strings, canonical order.
/// n <= 12.
std::vector<Partition> enumerate_partitions(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& emit);
std::uint64_t count_partitions(int n);

}  // namespace f1m
