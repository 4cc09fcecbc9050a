#pragma once

#include <cstdint>
#include <vector>

#include "f1m/finset.hpp"
#include "f1m/plasma.hpp"

namespace f1m {

/// Dynkin system on the pointed set <n>: contains the empty set, closed
/// under complement in {0..n} and under unions of disjoint members.
/// Family bits are indexed by pointed masks (bit i <-> element i).
struct DynkinSystem {
  int n = 0;
  SetFamily family;  // ambient_bits == n+1

  bool operator==(const DynkinSystem&) const = default;
  auto operator<=>(const DynkinSystem& o) const { return family <=> o.family; }
};

/// KZ-system on the unpointed set {1..n}. Family bits are indexed by
/// unpointed masks (bit i-1 <-> element i).
struct KZSystem {
  int n = 0;
  SetFamily family;  // ambient_bits == n

  bool operator==(const KZSystem&) const = default;
  auto operator<=>(const KZSystem& o) const { return family <=> o.family; }
};

bool validate_dynkin(const SetFamily& family, int n);
bool validate_kz(const SetFamily& family, int n);

DynkinSystem full_powerset_system(int n);

/// Kernel of a plasma morphism P(n) -> K: the family of subsets sent to 0.
KZSystem kappa(const MorphismTable& f, int n);
MorphismTable kappa_inverse(const KZSystem& x);

/// X |-> X together with the complements of its members (which all
/// contain the basepoint 0).
DynkinSystem phi(const KZSystem& x);
/// Y |-> the members of Y avoiding the basepoint. Inverse of phi.
KZSystem psi(const DynkinSystem& y);

/// Pushforward along phi: A is a member iff its preimage is.
DynkinSystem dynk_map(const PointedMap& map, const DynkinSystem& x);

struct DynkinEnumOptions {
  int ceiling = 7;
  int threads = 1;
};

/// All Dynkin systems on <n>, ascending by family bitvector. Backed by the
/// KZ backtracking engine plus phi.
std::vector<DynkinSystem> enumerate_dynkin(int n, const DynkinEnumOptions& opts = {});
std::uint64_t count_dynkin(int n, const DynkinEnumOptions& opts = {});

enum class DynkinOracle {
  kAxiomScan,     // oracle-A: scan all families over P({0..n}), n <= 3
  kMorphismScan,  // oracle-B: scan all functions P({1..n}) -> {0,1}, n <= 4 (5 if slow)
};

std::vector<DynkinSystem> enumerate_dynkin_oracle(int n, DynkinOracle which,
                                                  bool allow_slow = false, int threads = 1);

bool is_intersection_closed(const DynkinSystem& x);

}  // namespace f1m
