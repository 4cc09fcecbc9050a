#include "f1m/dynkin.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>

#include "f1m/kzengine.hpp"

namespace f1m {

bool validate_dynkin(const SetFamily& family, int n) {
  if (family.ambient_bits() != n + 1) return false;
  const Mask full = (Mask{1} << (n + 1)) - 1;
  if (!family.test(0)) return false;
  std::vector<Mask> mem = family.members();
  for (Mask a : mem)
    if (!family.test(full ^ a)) return false;
  for (Mask a : mem)
    for (Mask b : mem)
      if (!(a & b) && !family.test(a | b)) return false;
  return true;
}

bool validate_kz(const SetFamily& family, int n) {
  if (family.ambient_bits() != n) return false;
  const Mask full = (Mask{1} << n) - 1;
  if (!family.test(0)) return false;
  std::vector<Mask> mem = family.members();
  for (Mask a : mem) {
    // walk every subset disjoint from a
    Mask space = full & ~a;
    Mask b = 0;
    for (;;) {
      if (family.test(b)) {
        if (!family.test(a | b)) return false;
      } else {
        if (family.test(a | b)) return false;
      }
      if (b == space) break;
      b = (b - space) & space;  // next submask of space
    }
  }
  return true;
}

DynkinSystem full_powerset_system(int n) {
  DynkinSystem d{n, SetFamily(n + 1)};
  for (Mask m = 0; m < (Mask{1} << (n + 1)); ++m) d.family.set(m);
  return d;
}

KZSystem kappa(const MorphismTable& f, int n) {
  if (f.size() != (std::size_t{1} << n)) throw std::invalid_argument("kappa: table size mismatch");
  KZSystem x{n, SetFamily(n)};
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if (f[a] == 0) x.family.set(a);
  return x;
}

MorphismTable kappa_inverse(const KZSystem& x) {
  MorphismTable f(std::size_t{1} << x.n);
  for (Mask a = 0; a < (Mask{1} << x.n); ++a) f[a] = x.family.test(a) ? 0 : 1;
  return f;
}

DynkinSystem phi(const KZSystem& x) {
  if (!validate_kz(x.family, x.n)) throw std::invalid_argument("phi: not a KZ-system");
  DynkinSystem d{x.n, SetFamily(x.n + 1)};
  const Mask full = (Mask{1} << (x.n + 1)) - 1;
  for (Mask a = 0; a < (Mask{1} << x.n); ++a)
    if (x.family.test(a)) {
      d.family.set(a << 1);
      d.family.set(full ^ (a << 1));
    }
  return d;
}

KZSystem psi(const DynkinSystem& y) {
  if (!validate_dynkin(y.family, y.n)) throw std::invalid_argument("psi: not a Dynkin system");
  KZSystem x{y.n, SetFamily(y.n)};
  for (Mask m = 0; m < (Mask{1} << (y.n + 1)); m += 2)
    if (y.family.test(m)) x.family.set(m >> 1);
  return x;
}

DynkinSystem dynk_map(const PointedMap& map, const DynkinSystem& x) {
  if (map.src != x.n) throw std::invalid_argument("dynk_map: ambient mismatch");
  DynkinSystem out{map.dst, SetFamily(map.dst + 1)};
  for (Mask a = 0; a < (Mask{1} << (map.dst + 1)); ++a)
    if (x.family.test(preimage_pointed_mask(map, a))) out.family.set(a);
  return out;
}

std::vector<DynkinSystem> enumerate_dynkin(int n, const DynkinEnumOptions& opts) {
  if (n < 0 || n > opts.ceiling) throw std::invalid_argument("enumerate_dynkin: ceiling exceeded");
  std::vector<DynkinSystem> out;
  for (const SetFamily& kz : enumerate_kz(n, opts.threads))
    out.push_back(phi(KZSystem{n, kz}));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_dynkin(int n, const DynkinEnumOptions& opts) {
  if (n < 0 || n > opts.ceiling) throw std::invalid_argument("count_dynkin: ceiling exceeded");
  return count_kz(n, opts.threads);
}

namespace {

std::vector<DynkinSystem> oracle_axiom_scan(int n) {
  if (n > 3) throw std::invalid_argument("oracle-A supports n <= 3");
  const int bits = 1 << (n + 1);
  std::vector<DynkinSystem> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << bits); ++fam) {
    SetFamily f(n + 1);
    for (int m = 0; m < bits; ++m)
      if ((fam >> m) & 1u) f.set(static_cast<Mask>(m));
    if (validate_dynkin(f, n)) out.push_back(DynkinSystem{n, f});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Scan a range of candidate functions P({1..n}) -> {0,1}, packed as words
// with bit A = f(A), keeping the plasma-morphism survivors.
void morphism_scan_range(int n, std::uint64_t lo, std::uint64_t hi,
                         const std::vector<std::array<int, 3>>& triples,
                         std::vector<std::uint64_t>& survivors) {
  for (std::uint64_t u = lo; u < hi; ++u) {
    const std::uint64_t w = u << 1;  // f(empty set) = 0
    bool ok = true;
    for (const auto& t : triples) {
      unsigned fa = (w >> t[0]) & 1u, fb = (w >> t[1]) & 1u, fc = (w >> t[2]) & 1u;
      if (!(fa & fb) && fc != (fa | fb)) {
        ok = false;
        break;
      }
    }
    if (ok) survivors.push_back(w);
  }
}

std::vector<DynkinSystem> oracle_morphism_scan(int n, bool allow_slow, int threads) {
  if (n > 5 || (n == 5 && !allow_slow))
    throw std::invalid_argument("oracle-B supports n <= 4 (n = 5 only when slow scans are allowed)");
  const int subsets = 1 << n;
  std::vector<std::array<int, 3>> triples;
  for (int a = 1; a < subsets; ++a)
    for (int b = a + 1; b < subsets; ++b)
      if (!(a & b)) triples.push_back({a, b, a | b});

  const std::uint64_t total = std::uint64_t{1} << (subsets - 1);
  std::vector<std::uint64_t> survivors;
  if (threads <= 1 || total < (1u << 20)) {
    morphism_scan_range(n, 0, total, triples, survivors);
  } else {
    const int chunks = threads * 8;
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(chunks));
    std::vector<std::future<void>> futs;
    for (int c = 0; c < chunks; ++c) {
      std::uint64_t lo = total / chunks * c;
      std::uint64_t hi = (c == chunks - 1) ? total : total / chunks * (c + 1);
      futs.push_back(std::async(std::launch::async, [&, c, lo, hi] {
        morphism_scan_range(n, lo, hi, triples, parts[static_cast<std::size_t>(c)]);
      }));
    }
    for (auto& f : futs) f.wait();
    for (auto& p : parts) survivors.insert(survivors.end(), p.begin(), p.end());
  }

  std::vector<DynkinSystem> out;
  for (std::uint64_t w : survivors) {
    MorphismTable f(static_cast<std::size_t>(subsets));
    for (int a = 0; a < subsets; ++a) f[static_cast<std::size_t>(a)] = static_cast<int>((w >> a) & 1u);
    out.push_back(phi(kappa(f, n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DynkinSystem> enumerate_dynkin_oracle(int n, DynkinOracle which, bool allow_slow,
                                                  int threads) {
  switch (which) {
    case DynkinOracle::kAxiomScan:
      return oracle_axiom_scan(n);
    case DynkinOracle::kMorphismScan:
      return oracle_morphism_scan(n, allow_slow, threads);
  }
  throw std::invalid_argument("enumerate_dynkin_oracle: unknown oracle");
}

bool is_intersection_closed(const DynkinSystem& x) {
  std::vector<Mask> mem = x.family.members();
  for (Mask a : mem)
    for (Mask b : mem)
      if (!x.family.test(a & b)) return false;
  return true;
}

}  // namespace f1m
