#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace f1m {

// Subsets of ambients with at most kMaxAmbient elements fit in one word.
using Mask = std::uint32_t;

inline constexpr int kMaxAmbient = 24;

/// Pointed finite set <n> = {0,...,n}; 0 is the basepoint.
struct PointedSet {
  int n = 0;
};

/// Basepoint-preserving function <src> -> <dst>, stored as a value table.
struct PointedMap {
  int src = 0;
  int dst = 0;
  std::vector<int> table;  // length src+1, table[0] == 0

  static PointedMap identity(int n);
  /// k -> min(k,1), the map <n> -> <1> collapsing all non-basepoint elements.
  static PointedMap fold(int n);
  static PointedMap constant_zero(int n, int m);

  int operator()(int k) const { return table[static_cast<std::size_t>(k)]; }
  bool operator==(const PointedMap&) const = default;
  bool operator<(const PointedMap& o) const;

  /// Compact key usable for memo tables: "src>dst:t0,t1,...".
  std::string encode() const;
};

bool is_valid(const PointedMap& f);
PointedMap compose(const PointedMap& g, const PointedMap& f);

/// All (m+1)^n pointed maps <n> -> <m> in lexicographic order by table.
std::vector<PointedMap> enumerate_pointed_maps(int n, int m);

/// Subset of {1..n} (unpointed: bit i-1 <-> element i) or of {0..n}
/// (pointed: bit i <-> element i).
struct Subset {
  int ambient = 0;
  bool pointed = false;
  Mask mask = 0;

  bool operator==(const Subset&) const = default;
};

/// Preimage of the unpointed subset with mask `a` (over {1..m}) under
/// phi : <n> -> <m>, as an unpointed mask over {1..n}.
Mask preimage_mask(const PointedMap& phi, Mask a);
Subset preimage_subset(const PointedMap& phi, const Subset& a);

/// Preimage of the pointed subset with mask `a` (over {0..m}) under
/// phi : <n> -> <m>, as a pointed mask over {0..n}.
Mask preimage_pointed_mask(const PointedMap& phi, Mask a);

/// Characteristic map chi_A : <n> -> <1> of the unpointed subset A = `a`.
PointedMap characteristic_map(int n, Mask a);

/// Family of subsets of a fixed ambient: a bitvector indexed by subset mask.
class SetFamily {
 public:
  SetFamily() : SetFamily(0) {}
  explicit SetFamily(int ambient_bits);

  int ambient_bits() const { return ambient_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << ambient_; }

  bool test(Mask m) const;
  void set(Mask m, bool value = true);
  std::size_t count() const;
  std::vector<Mask> members() const;

  /// Little-endian hex: nibble j holds membership bits 4j..4j+3.
  std::string to_hex() const;
  static SetFamily from_hex(int ambient_bits, const std::string& hex);

  bool operator==(const SetFamily&) const = default;
  /// Orders families as integers (bit for subset mask m has weight 2^m).
  std::strong_ordering operator<=>(const SetFamily& o) const;

 private:
  int ambient_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace f1m
