#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "f1m/finset.hpp"

namespace f1m {

/// Backtracking enumeration of KZ families on {1..n}: families containing
/// the empty set, closed under disjoint union, and co-closed (a disjoint
/// union of a member and a non-member is a non-member).
///
/// Subsets are decided in graded order (popcount, then numeric mask), so
/// every proper subset of C is decided before C and the two forcing rules
/// are complete: C is forced IN when some decided disjoint decomposition
/// A|B = C has A,B both in, forced OUT when some has A in and B out.
/// A subset forced both ways prunes the branch.
///
/// Results are reported in no particular order; callers sort.
void for_each_kz(int n, const std::function<void(const SetFamily&)>& emit);

/// Deterministic, canonically sorted (ascending as bitvector integers).
/// `threads` > 1 splits the search tree; output is scheduling-independent.
std::vector<SetFamily> enumerate_kz(int n, int threads = 1);

std::uint64_t count_kz(int n, int threads = 1);

}  // namespace f1m
