#include "f1m/plasma.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "f1m/kzengine.hpp"

namespace f1m {
namespace {

CarrierSet remap_set(CarrierSet s, const std::vector<int>& index) {
  CarrierSet out = 0;
  while (s) {
    int z = std::countr_zero(s);
    s &= s - 1;
    out |= CarrierSet{1} << index[static_cast<std::size_t>(z)];
  }
  return out;
}

Plasma apply_perm(const Plasma& p, const std::vector<int>& perm) {
  Plasma q;
  q.size = p.size;
  q.identity = perm[static_cast<std::size_t>(p.identity)];
  q.table.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y)
      q.at(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]) =
          remap_set(p.at(x, y), perm);
  return q;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool satisfies_plasma_axioms(const Plasma& p) {
  if (p.size < 1 || p.size > 64) return false;
  if (p.identity < 0 || p.identity >= p.size) return false;
  if (p.table.size() != static_cast<std::size_t>(p.size) * p.size) return false;
  const CarrierSet all = p.size == 64 ? ~CarrierSet{0} : (CarrierSet{1} << p.size) - 1;
  for (int x = 0; x < p.size; ++x) {
    if (!((p.at(x, p.identity) >> x) & 1u)) return false;
    for (int y = 0; y < p.size; ++y) {
      if (p.at(x, y) & ~all) return false;
      if (p.at(x, y) != p.at(y, x)) return false;
    }
  }
  return true;
}

Plasma krasner() {
  Plasma k;
  k.size = 2;
  k.identity = 0;
  k.table = {0b01, 0b10, 0b10, 0b11};
  return k;
}

Plasma free_point_plasma() {
  Plasma k;
  k.size = 2;
  k.identity = 0;
  k.table = {0b01, 0b10, 0b10, 0b00};
  return k;
}

Plasma powerset_plasma(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("powerset_plasma: n out of range");
  Plasma p;
  p.size = 1 << n;
  p.identity = 0;
  p.table.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b)
      p.at(a, b) = (a & b) ? 0 : (CarrierSet{1} << (a | b));
  return p;
}

CoproductResult coproduct_with_inclusions(const Plasma& p, const Plasma& q) {
  CoproductResult r;
  r.plasma.size = p.size + q.size - 1;
  r.plasma.identity = 0;
  if (r.plasma.size > 64) throw std::invalid_argument("coproduct: carrier too large");
  r.plasma.table.assign(static_cast<std::size_t>(r.plasma.size) * r.plasma.size, 0);

  r.incl_left.assign(static_cast<std::size_t>(p.size), 0);
  r.incl_right.assign(static_cast<std::size_t>(q.size), 0);
  int next = 1;
  for (int x = 0; x < p.size; ++x)
    r.incl_left[static_cast<std::size_t>(x)] = (x == p.identity) ? 0 : next++;
  for (int x = 0; x < q.size; ++x)
    r.incl_right[static_cast<std::size_t>(x)] = (x == q.identity) ? 0 : next++;

  // Within-summand sums as in the summand; the two rules overlap only at
  // (identity, identity), where we take the union of the remapped results.
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y)
      r.plasma.at(r.incl_left[static_cast<std::size_t>(x)],
                  r.incl_left[static_cast<std::size_t>(y)]) |= remap_set(p.at(x, y), r.incl_left);
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      r.plasma.at(r.incl_right[static_cast<std::size_t>(x)],
                  r.incl_right[static_cast<std::size_t>(y)]) |= remap_set(q.at(x, y), r.incl_right);
  return r;
}

Plasma coproduct(const Plasma& p, const Plasma& q) {
  return coproduct_with_inclusions(p, q).plasma;
}

Plasma wedge_krasner(int k) {
  if (k < 1) throw std::invalid_argument("wedge_krasner: k must be positive");
  Plasma w = krasner();
  for (int i = 1; i < k; ++i) w = coproduct(w, krasner());
  return w;
}

Plasma quotient_plasma_prime_field(int p) {
  if (!is_prime(p) || p > 97) throw std::invalid_argument("quotient_plasma_prime_field: p must be prime and <= 97");
  // carrier: 0 = the zero coset {0}, 1 = the coset of units
  auto reps = [&](int coset) {
    std::vector<int> v;
    if (coset == 0) v.push_back(0);
    else
      for (int u = 1; u < p; ++u) v.push_back(u);
    return v;
  };
  Plasma q;
  q.size = 2;
  q.identity = 0;
  q.table.assign(4, 0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      CarrierSet s = 0;
      for (int u : reps(x))
        for (int v : reps(y)) s |= CarrierSet{1} << (((u + v) % p) ? 1 : 0);
      q.at(x, y) = s;
    }
  return q;
}

bool is_krasner(const Plasma& p) { return p == krasner(); }

bool is_powerset_plasma(const Plasma& p, int* n_out) {
  if (p.identity != 0) return false;
  int n = 0;
  while ((1 << n) < p.size) ++n;
  if ((1 << n) != p.size || n > 6) return false;
  if (p != powerset_plasma(n)) return false;
  if (n_out) *n_out = n;
  return true;
}

bool is_wedge_of_krasner(const Plasma& p, int* k_out) {
  int k = p.size - 1;
  if (k < 1 || p != wedge_krasner(k)) return false;
  if (k_out) *k_out = k;
  return true;
}

bool is_plasma_morphism(const MorphismTable& f, const Plasma& src, const Plasma& dst) {
  if (f.size() != static_cast<std::size_t>(src.size)) return false;
  for (int v : f)
    if (v < 0 || v >= dst.size) return false;
  if (f[static_cast<std::size_t>(src.identity)] != dst.identity) return false;
  for (int x = 0; x < src.size; ++x)
    for (int y = x; y < src.size; ++y) {
      CarrierSet img = remap_set(src.at(x, y), f);
      if (img & ~dst.at(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return false;
    }
  return true;
}

MorphismTable compose_morphisms(const MorphismTable& g, const MorphismTable& f) {
  MorphismTable h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[static_cast<std::size_t>(f[i])];
  return h;
}

MorphismTable identity_morphism(const Plasma& p) {
  MorphismTable f(static_cast<std::size_t>(p.size));
  for (int i = 0; i < p.size; ++i) f[static_cast<std::size_t>(i)] = i;
  return f;
}

MorphismTable powerset_contravariant_map(const PointedMap& phi) {
  MorphismTable f(std::size_t{1} << phi.dst);
  for (Mask a = 0; a < (Mask{1} << phi.dst); ++a)
    f[a] = static_cast<int>(preimage_mask(phi, a));
  return f;
}

namespace {

// Generic lexicographic backtracking over value tables. Elements are
// assigned in carrier order with the identity pinned first; a pair (x,y)
// is checked as soon as x, y and every element of x+y are assigned.
std::vector<MorphismTable> enumerate_generic(const Plasma& src, const Plasma& dst) {
  const int c = src.size;
  std::vector<int> ord;
  ord.push_back(src.identity);
  for (int x = 0; x < c; ++x)
    if (x != src.identity) ord.push_back(x);
  std::vector<int> pos(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) pos[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;

  // trigger[p]: pairs fully determined once position p is assigned
  std::vector<std::vector<std::pair<int, int>>> trigger(static_cast<std::size_t>(c));
  for (int x = 0; x < c; ++x)
    for (int y = x; y < c; ++y) {
      int last = std::max(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(y)]);
      CarrierSet s = src.at(x, y);
      while (s) {
        int z = std::countr_zero(s);
        s &= s - 1;
        last = std::max(last, pos[static_cast<std::size_t>(z)]);
      }
      trigger[static_cast<std::size_t>(last)].push_back({x, y});
    }

  std::vector<MorphismTable> out;
  MorphismTable f(static_cast<std::size_t>(c), 0);
  f[static_cast<std::size_t>(src.identity)] = dst.identity;

  auto ok_at = [&](int p) {
    for (auto [x, y] : trigger[static_cast<std::size_t>(p)]) {
      CarrierSet allowed = dst.at(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]);
      if (remap_set(src.at(x, y), f) & ~allowed) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p == c) {
      out.push_back(f);
      return;
    }
    int elem = ord[static_cast<std::size_t>(p)];
    for (int v = 0; v < dst.size; ++v) {
      f[static_cast<std::size_t>(elem)] = v;
      if (ok_at(p)) self(self, p + 1);
    }
    f[static_cast<std::size_t>(elem)] = 0;
  };

  if (ok_at(0)) rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorphismTable> enumerate_powerset_to_krasner(int n, int threads) {
  std::vector<MorphismTable> out;
  for (const SetFamily& kz : enumerate_kz(n, threads)) {
    MorphismTable f(std::size_t{1} << n);
    for (Mask a = 0; a < (Mask{1} << n); ++a) f[a] = kz.test(a) ? 0 : 1;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<MorphismTable> enumerate_morphisms(const Plasma& src, const Plasma& dst,
                                               const EnumOptions& opts) {
  const double work = std::pow(static_cast<double>(dst.size), src.size - 1);
  if (work <= opts.budget) return enumerate_generic(src, dst);

  int n = 0, k = 0;
  if (is_powerset_plasma(src, &n)) {
    if (is_krasner(dst)) return enumerate_powerset_to_krasner(n, opts.threads);
    if (is_wedge_of_krasner(dst, &k)) {
      // A morphism into a wedge of copies of K lands in a single summand,
      // so relabel the nonzero values of each morphism into K.
      std::vector<MorphismTable> base = enumerate_powerset_to_krasner(n, opts.threads);
      std::vector<MorphismTable> out;
      MorphismTable zero(std::size_t{1} << n, 0);
      out.push_back(zero);
      for (const MorphismTable& g : base) {
        if (g == zero) continue;
        for (int j = 1; j <= k; ++j) {
          MorphismTable f(g.size());
          for (std::size_t i = 0; i < g.size(); ++i) f[i] = g[i] ? j : 0;
          out.push_back(std::move(f));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  throw std::runtime_error("enumerate_morphisms: budget exceeded and no specialized route");
}

std::optional<std::vector<int>> are_isomorphic(const Plasma& p, const Plasma& q, int ceiling) {
  if (p.size != q.size) return std::nullopt;
  if (p.size > ceiling) throw std::invalid_argument("are_isomorphic: ceiling exceeded");

  // Move both identities to index 0, search, then translate back.
  auto to_front = [](const Plasma& a) {
    std::vector<int> perm(static_cast<std::size_t>(a.size));
    int next = 1;
    for (int x = 0; x < a.size; ++x)
      perm[static_cast<std::size_t>(x)] = (x == a.identity) ? 0 : next++;
    return perm;
  };
  std::vector<int> pp = to_front(p), qp = to_front(q);
  Plasma a = apply_perm(p, pp), b = apply_perm(q, qp);
  const int c = a.size;

  // degree signature: sorted row multiset of result sizes, plus the diagonal
  auto signature = [](const Plasma& x, int e) {
    std::vector<int> sig;
    for (int y = 0; y < x.size; ++y) sig.push_back(std::popcount(x.at(e, y)));
    std::sort(sig.begin(), sig.end());
    sig.push_back(std::popcount(x.at(e, e)));
    sig.push_back(static_cast<int>((x.at(e, e) >> e) & 1u));
    return sig;
  };
  std::vector<std::vector<int>> siga, sigb;
  for (int e = 0; e < c; ++e) {
    siga.push_back(signature(a, e));
    sigb.push_back(signature(b, e));
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> f(static_cast<std::size_t>(c), -1);
  std::vector<bool> used(static_cast<std::size_t>(c), false);
  f[0] = 0;
  used[0] = true;

  auto consistent = [&](int k) {
    // check every pair whose data became fully assigned at step k
    for (int x = 0; x <= k; ++x)
      for (int y = x; y <= k; ++y) {
        CarrierSet s = a.at(x, y);
        bool ready = true;
        int last = std::max(x, y);
        CarrierSet t = s;
        while (t) {
          int z = std::countr_zero(t);
          t &= t - 1;
          if (f[static_cast<std::size_t>(z)] < 0) ready = false;
          last = std::max(last, z);
        }
        if (!ready || last != k) continue;
        if (remap_set(s, f) != b.at(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
          return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int k) -> bool {
    if (k == c) return true;
    for (int v = 1; v < c; ++v) {
      if (used[static_cast<std::size_t>(v)] || siga[static_cast<std::size_t>(k)] != sigb[static_cast<std::size_t>(v)])
        continue;
      f[static_cast<std::size_t>(k)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
      f[static_cast<std::size_t>(k)] = -1;
    }
    return false;
  };

  if (!consistent(0)) return std::nullopt;
  if (!rec(rec, 1)) return std::nullopt;

  // translate: original p index x -> original q index
  std::vector<int> qinv(static_cast<std::size_t>(c));
  for (int x = 0; x < c; ++x) qinv[static_cast<std::size_t>(qp[static_cast<std::size_t>(x)])] = x;
  std::vector<int> out(static_cast<std::size_t>(c));
  for (int x = 0; x < c; ++x)
    out[static_cast<std::size_t>(x)] =
        qinv[static_cast<std::size_t>(f[static_cast<std::size_t>(pp[static_cast<std::size_t>(x)])])];
  return out;
}

int factor_wedge_morphism(const MorphismTable& f, const Plasma& src, int k) {
  Plasma w = wedge_krasner(k);
  if (!is_plasma_morphism(f, src, w))
    throw std::invalid_argument("factor_wedge_morphism: not a plasma morphism");
  int summand = 0;
  for (int v : f) {
    if (v == 0) continue;
    if (summand == 0) summand = v;
    else if (summand != v)
      throw std::runtime_error("factor_wedge_morphism: image meets two summands");
  }
  return summand;
}

}  // namespace f1m
