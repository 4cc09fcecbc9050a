#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "f1m/gammaset.hpp"
#include "f1m/partition.hpp"

namespace f1m {

/// d_i as a pointed map <n> -> <n-1>: k stays put up to i, shifts down past
/// i, and anything landing outside {1..n-1} goes to the basepoint. So d_0
/// deletes element 1, d_n deletes element n, and inner d_i merges i, i+1.
PointedMap face_map(int n, int i);

/// s_i as a pointed map <n> -> <n+1>: k stays put up to i, shifts up past i,
/// so the image skips i+1.
PointedMap degeneracy_map(int n, int i);

/// The delooping of a window, with all structure maps tabulated.
struct SimplicialWindow {
  int levels = 0;
  std::vector<std::vector<std::string>> keys;        // keys[n][e]
  std::vector<std::vector<std::vector<int>>> faces;  // faces[n][i][e], 1 <= n
  std::vector<std::vector<std::vector<int>>> degens; // degens[n][i][e], n < levels

  bool operator==(const SimplicialWindow&) const = default;
  std::size_t level_size(int n) const { return keys[static_cast<std::size_t>(n)].size(); }
  /// True when the element is in the image of some degeneracy.
  bool is_degenerate(int n, int e) const;
};

SimplicialWindow deloop(const GammaSetWindow& x);

/// Every instance of every simplicial identity on the window.
CheckResult check_simplicial_identities(const SimplicialWindow& w);

/// Subsets of {1..n} sorted by size, then lexicographically by element list.
/// Differs from numeric mask order once n >= 4.
std::vector<Mask> graded_lex_masks(int n);

/// Binary-string rendering of a morphism table P(n) -> K with the domain in
/// graded-lex order, e.g. "01011010" at n = 3.
std::string tuple_of_table(const MorphismTable& f, int n);
MorphismTable table_of_tuple(const std::string& bits, int n);

/// All plasma morphisms P(n) -> K as tuples, lexicographically sorted.
std::vector<std::string> simplex_tuples(int n, const EnumOptions& opts = {});

/// Labels the 2-simplices of a delooped h_hat(K, .) window by boundary:
/// (d2, d0, d1) = (f({1}), f({2}), f({1,2})), with A=(0,0,0), B=(0,1,1),
/// C=(1,0,1), D=(1,1,0), E=(1,1,1). Throws on any other triple.
std::vector<char> classify_2simplices(const SimplicialWindow& w);

/// The associator membership relation on a level-3 tuple: the {1,2,3} entry
/// must lie in the intersection of the three bracketed sums, where each
/// two-element sum is read off the tuple and the outer sums happen in K.
bool check_associator(const std::string& tuple);

/// part_map along an inner face, cross-checked against the direct
/// merge-the-blocks-of-i-and-i+1, delete, decrement procedure. 0 < i < n.
Partition face_action_on_partitions(int n, int i, const Partition& p);

nlohmann::json export_json(const SimplicialWindow& w);
SimplicialWindow import_json(const nlohmann::json& j);
/// 1-skeleton as a dot graph; 2-simplices appear as "// triangle" records.
std::string export_dot(const SimplicialWindow& w);

}  // namespace f1m
