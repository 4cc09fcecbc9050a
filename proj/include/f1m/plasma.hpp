#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "f1m/finset.hpp"

namespace f1m {

// Subset of a plasma carrier; carriers here never exceed 64 elements.
using CarrierSet = std::uint64_t;

/// Finite plasma: a carrier with a commutative multivalued addition and a
/// weak identity (x is always an element of x + identity). Empty sums are
/// legal values of the hyperoperation.
struct Plasma {
  int size = 1;
  int identity = 0;
  std::vector<CarrierSet> table;  // size*size entries, row-major

  CarrierSet at(int x, int y) const {
    return table[static_cast<std::size_t>(x) * size + y];
  }
  CarrierSet& at(int x, int y) {
    return table[static_cast<std::size_t>(x) * size + y];
  }
  bool operator==(const Plasma&) const = default;
};

/// Commutativity and the weak-identity axiom, checked over all pairs.
bool satisfies_plasma_axioms(const Plasma& p);

/// {0,1} with 0+0={0}, 0+1={1}, 1+1={0,1}.
Plasma krasner();
/// {0,1} with 1+1 empty; the negative-test companion of krasner().
Plasma free_point_plasma();
/// Carrier = subsets of {1..n} indexed by mask; identity is the empty set;
/// a+b = {a union b} when disjoint, empty otherwise. Requires n <= 6.
Plasma powerset_plasma(int n);
/// Canonical coproduct: identities identified at index 0, then the
/// non-identity elements of p, then those of q. Cross-summand sums are empty.
Plasma coproduct(const Plasma& p, const Plasma& q);

struct CoproductResult {
  Plasma plasma;
  std::vector<int> incl_left;   // carrier of p -> carrier of the coproduct
  std::vector<int> incl_right;  // carrier of q -> carrier of the coproduct
};
CoproductResult coproduct_with_inclusions(const Plasma& p, const Plasma& q);

/// k-fold coproduct of krasner(): carrier {0,1,...,k}.
Plasma wedge_krasner(int k);

/// The two-element plasma of cosets {0}, F_p^* of the prime field F_p,
/// with coset addition computed from all representative sums. p prime <= 97.
Plasma quotient_plasma_prime_field(int p);

bool is_krasner(const Plasma& p);
bool is_powerset_plasma(const Plasma& p, int* n_out = nullptr);
bool is_wedge_of_krasner(const Plasma& p, int* k_out = nullptr);

/// A plasma morphism src -> dst as a carrier value table.
using MorphismTable = std::vector<int>;

bool is_plasma_morphism(const MorphismTable& f, const Plasma& src, const Plasma& dst);
MorphismTable compose_morphisms(const MorphismTable& g, const MorphismTable& f);
MorphismTable identity_morphism(const Plasma& p);

/// The morphism P(m) -> P(n) induced contravariantly by phi : <n> -> <m>,
/// sending a subset to its preimage.
MorphismTable powerset_contravariant_map(const PointedMap& phi);

struct EnumOptions {
  double budget = 1e8;  // cap on |dst|^(|src|-1) before specialized routes kick in
  int threads = 1;
};

/// All plasma morphisms src -> dst, in lexicographic order by table.
/// Falls back from generic backtracking to the KZ-based route when the
/// brute-force budget is exceeded and dst is K or a wedge of copies of K.
std::vector<MorphismTable> enumerate_morphisms(const Plasma& src, const Plasma& dst,
                                               const EnumOptions& opts = {});

/// An identity-preserving bijection with f(x+y) = f(x)+f(y) as carrier sets,
/// or nullopt. Search prunes by per-element hyperoperation statistics.
std::optional<std::vector<int>> are_isomorphic(const Plasma& p, const Plasma& q,
                                               int ceiling = 10);

/// For a morphism into wedge_krasner(k): 0 when f is the zero morphism,
/// otherwise the unique summand index in 1..k containing the image.
/// Throws if f is not a morphism.
int factor_wedge_morphism(const MorphismTable& f, const Plasma& src, int k);

}  // namespace f1m
