#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "f1m/dynkin.hpp"
#include "f1m/partition.hpp"
#include "f1m/plasma.hpp"
#include "f1m/report.hpp"

namespace f1m {

/// A truncated F1-module: pointed value sets at levels <0>..<N> (basepoint
/// always at index 0) together with the action of every pointed map inside
/// the window. Actions are computed lazily and memoized; windows are
/// immutable values after construction.
class GammaSetWindow {
 public:
  GammaSetWindow() = default;
  GammaSetWindow(int levels, std::vector<std::vector<std::string>> keys,
                 std::function<int(const PointedMap&, int)> action);

  int levels() const { return levels_; }
  std::size_t level_size(int n) const { return keys_[static_cast<std::size_t>(n)].size(); }
  const std::vector<std::string>& keys(int n) const { return keys_[static_cast<std::size_t>(n)]; }

  /// Action of phi : <n> -> <m> on the element `elem` at level n.
  int apply(const PointedMap& phi, int elem) const;

 private:
  int levels_ = 0;
  std::vector<std::vector<std::string>> keys_;
  std::function<int(const PointedMap&, int)> action_;
  struct Memo;
  std::shared_ptr<Memo> memo_;
};

/// Levelwise function between two windows of the same depth.
struct NaturalMap {
  int levels = 0;
  std::vector<std::vector<int>> components;
};

GammaSetWindow dynk_window(int levels);  // levels <= 5
GammaSetWindow part_window(int levels);  // levels <= 6

/// Level n = plasma morphisms P(n) -> m, basepoint the zero morphism;
/// the action precomposes with the contravariant power-set morphism.
GammaSetWindow h_hat(const Plasma& m, int levels, const EnumOptions& opts = {});

/// Wedge of windows: basepoints identified at index 0, summand elements
/// laid out in order. The action stays inside the summand (or hits the
/// basepoint).
GammaSetWindow wedge_window(const std::vector<GammaSetWindow>& parts);
GammaSetWindow wedge_window(const GammaSetWindow& x, const GammaSetWindow& y);

/// Index bookkeeping for wedge windows: summand j in 1..k, element e >= 1
/// at a level of size `part_size` maps to 1 + (j-1)*(part_size-1) + (e-1).
int wedge_index(const std::vector<std::size_t>& part_sizes, int summand, int elem);

/// The plasma on values[1] with x+y read off from values[2] via the two
/// projections and the fold.
Plasma truncate_to_plasma(const GammaSetWindow& x);

/// Adjunction unit at level n applied to one element: the candidate plasma
/// morphism P(n) -> truncate_to_plasma(x) given by A |-> x(chi_A)(elem).
MorphismTable unit_component(const GammaSetWindow& x, int n, int elem);

struct UnitLevelReport {
  bool components_are_morphisms = true;
  bool injective = true;
  bool surjective = true;
  std::size_t image_size = 0;
  std::size_t hom_size = 0;
  std::vector<MorphismTable> image;   // in element order
  std::vector<MorphismTable> missed;  // hom-set elements not hit
};
UnitLevelReport unit_report(const GammaSetWindow& x, int n);

/// The levelwise bijection h_hat(K) -> Dynk given by taking the kernel and
/// closing under complements.
NaturalMap phi_natural_iso(const GammaSetWindow& hk, const GammaSetWindow& dw);

/// Visit pointed maps inside a window: exhaustive for src,dst <= cap, plus
/// `samples` seeded random maps touching the levels above cap.
void for_each_window_map(int levels, int exhaustive_cap, unsigned seed, int samples,
                         const std::function<void(const PointedMap&)>& visit);

CheckResult check_functoriality(const GammaSetWindow& x, int exhaustive_cap = 3,
                                unsigned seed = 1, int samples = 500);
CheckResult check_naturality(const GammaSetWindow& x, const GammaSetWindow& y,
                             const NaturalMap& nat, int exhaustive_cap = 3,
                             unsigned seed = 1, int samples = 200);
CheckResult check_unit(const GammaSetWindow& x, bool expect_surjective);

/// Builds h_hat of the k-fold wedge of K and the k-fold wedge of the Dynkin
/// window, then exhibits a natural isomorphism between them (or fails).
CheckResult check_theorem_projective(int levels, int k);

// key <-> value-table helpers shared by h_hat and the simplicial exporters
std::string encode_table(const MorphismTable& t);
MorphismTable decode_table(const std::string& key);

}  // namespace f1m
