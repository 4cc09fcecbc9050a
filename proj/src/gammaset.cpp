#include "f1m/gammaset.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace f1m {

struct GammaSetWindow::Memo {
  std::mutex mu;
  std::unordered_map<std::string, int> map;
};

GammaSetWindow::GammaSetWindow(int levels, std::vector<std::vector<std::string>> keys,
                               std::function<int(const PointedMap&, int)> action)
    : levels_(levels),
      keys_(std::move(keys)),
      action_(std::move(action)),
      memo_(std::make_shared<Memo>()) {
  if (keys_.size() != static_cast<std::size_t>(levels_) + 1)
    throw std::invalid_argument("GammaSetWindow: level count mismatch");
  if (keys_[0].size() != 1)
    throw std::invalid_argument("GammaSetWindow: level 0 must be a single point");
}

int GammaSetWindow::apply(const PointedMap& phi, int elem) const {
  if (!is_valid(phi) || phi.src > levels_ || phi.dst > levels_)
    throw std::invalid_argument("GammaSetWindow::apply: map outside window");
  if (elem < 0 || static_cast<std::size_t>(elem) >= level_size(phi.src))
    throw std::out_of_range("GammaSetWindow::apply: element out of range");
  std::string key = phi.encode() + "#" + std::to_string(elem);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->map.find(key);
    if (it != memo_->map.end()) return it->second;
  }
  int result = action_(phi, elem);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->map.emplace(std::move(key), result);
  return result;
}

std::string encode_table(const MorphismTable& t) {
  std::string s = "t:";
  for (int v : t) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

MorphismTable decode_table(const std::string& key) {
  if (key.size() < 2 || key[0] != 't' || key[1] != ':')
    throw std::invalid_argument("decode_table: bad key");
  MorphismTable t;
  int v = 0;
  bool have = false;
  for (std::size_t i = 2; i < key.size(); ++i) {
    if (key[i] == ',') {
      t.push_back(v);
      v = 0;
      have = false;
    } else {
      v = v * 10 + (key[i] - '0');
      have = true;
    }
  }
  if (have) throw std::invalid_argument("decode_table: trailing digits");
  return t;
}

namespace {

struct IndexedLevels {
  std::vector<std::vector<std::string>> keys;
  std::vector<std::unordered_map<std::string, int>> index;

  void push_level(std::vector<std::string> level_keys) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < level_keys.size(); ++i)
      idx.emplace(level_keys[i], static_cast<int>(i));
    keys.push_back(std::move(level_keys));
    index.push_back(std::move(idx));
  }
  int lookup(int level, const std::string& key) const {
    auto it = index[static_cast<std::size_t>(level)].find(key);
    if (it == index[static_cast<std::size_t>(level)].end())
      throw std::logic_error("GammaSetWindow action left the window");
    return it->second;
  }
};

// basepoint first, everything else in the order given
template <typename T, typename Key>
std::vector<std::string> basepoint_first(std::vector<T>& elems, const T& basepoint, Key key) {
  std::vector<T> ordered;
  ordered.push_back(basepoint);
  for (const T& e : elems)
    if (!(e == basepoint)) ordered.push_back(e);
  if (ordered.size() != elems.size())
    throw std::logic_error("basepoint_first: basepoint missing from enumeration");
  elems = std::move(ordered);
  std::vector<std::string> keys;
  for (const T& e : elems) keys.push_back(key(e));
  return keys;
}

std::string partition_key(const Partition& p) {
  std::string s = "p:";
  for (int l : partition_to_labels(p)) {
    s += std::to_string(l);
    s += ',';
  }
  return s;
}

}  // namespace

GammaSetWindow dynk_window(int levels) {
  if (levels < 0 || levels > 5) throw std::invalid_argument("dynk_window: levels out of range");
  auto data = std::make_shared<std::vector<std::vector<DynkinSystem>>>();
  auto idx = std::make_shared<IndexedLevels>();
  for (int n = 0; n <= levels; ++n) {
    std::vector<DynkinSystem> systems = enumerate_dynkin(n);
    idx->push_level(basepoint_first(systems, full_powerset_system(n),
                                    [](const DynkinSystem& d) { return d.family.to_hex(); }));
    data->push_back(std::move(systems));
  }
  auto action = [data, idx](const PointedMap& phi, int e) {
    DynkinSystem out = dynk_map(phi, (*data)[static_cast<std::size_t>(phi.src)][static_cast<std::size_t>(e)]);
    return idx->lookup(phi.dst, out.family.to_hex());
  };
  return GammaSetWindow(levels, idx->keys, action);
}

GammaSetWindow part_window(int levels) {
  if (levels < 0 || levels > 6) throw std::invalid_argument("part_window: levels out of range");
  auto data = std::make_shared<std::vector<std::vector<Partition>>>();
  auto idx = std::make_shared<IndexedLevels>();
  for (int n = 0; n <= levels; ++n) {
    std::vector<Partition> parts = enumerate_partitions(n);
    idx->push_level(basepoint_first(parts, all_singletons(n), partition_key));
    data->push_back(std::move(parts));
  }
  auto action = [data, idx](const PointedMap& phi, int e) {
    Partition out = part_map(phi, (*data)[static_cast<std::size_t>(phi.src)][static_cast<std::size_t>(e)]);
    return idx->lookup(phi.dst, partition_key(out));
  };
  return GammaSetWindow(levels, idx->keys, action);
}

GammaSetWindow h_hat(const Plasma& m, int levels, const EnumOptions& opts) {
  if (levels < 0 || levels > 6) throw std::invalid_argument("h_hat: levels out of range");
  auto data = std::make_shared<std::vector<std::vector<MorphismTable>>>();
  auto idx = std::make_shared<IndexedLevels>();
  for (int n = 0; n <= levels; ++n) {
    std::vector<MorphismTable> homs = enumerate_morphisms(powerset_plasma(n), m, opts);
    MorphismTable zero(std::size_t{1} << n, m.identity);
    idx->push_level(basepoint_first(homs, zero, encode_table));
    data->push_back(std::move(homs));
  }
  auto action = [data, idx](const PointedMap& phi, int e) {
    const MorphismTable& f = (*data)[static_cast<std::size_t>(phi.src)][static_cast<std::size_t>(e)];
    MorphismTable g(std::size_t{1} << phi.dst);
    for (Mask a = 0; a < (Mask{1} << phi.dst); ++a) g[a] = f[preimage_mask(phi, a)];
    return idx->lookup(phi.dst, encode_table(g));
  };
  return GammaSetWindow(levels, idx->keys, action);
}

int wedge_index(const std::vector<std::size_t>& part_sizes, int summand, int elem) {
  if (elem == 0) return 0;
  int offset = 1;
  for (int j = 1; j < summand; ++j)
    offset += static_cast<int>(part_sizes[static_cast<std::size_t>(j - 1)]) - 1;
  return offset + elem - 1;
}

GammaSetWindow wedge_window(const std::vector<GammaSetWindow>& parts) {
  if (parts.empty()) throw std::invalid_argument("wedge_window: no summands");
  const int levels = parts[0].levels();
  for (const auto& p : parts)
    if (p.levels() != levels) throw std::invalid_argument("wedge_window: level mismatch");

  auto shared = std::make_shared<std::vector<GammaSetWindow>>(parts);
  std::vector<std::vector<std::string>> keys;
  std::vector<std::vector<std::size_t>> sizes(static_cast<std::size_t>(levels) + 1);
  for (int n = 0; n <= levels; ++n) {
    std::vector<std::string> level{"*"};
    for (std::size_t j = 0; j < parts.size(); ++j) {
      sizes[static_cast<std::size_t>(n)].push_back(parts[j].level_size(n));
      for (std::size_t e = 1; e < parts[j].level_size(n); ++e)
        level.push_back("w" + std::to_string(j + 1) + ":" + parts[j].keys(n)[e]);
    }
    keys.push_back(std::move(level));
  }
  auto shared_sizes = std::make_shared<std::vector<std::vector<std::size_t>>>(std::move(sizes));
  auto action = [shared, shared_sizes](const PointedMap& phi, int w) {
    const auto& src_sizes = (*shared_sizes)[static_cast<std::size_t>(phi.src)];
    const auto& dst_sizes = (*shared_sizes)[static_cast<std::size_t>(phi.dst)];
    if (w == 0) {
      int r = (*shared)[0].apply(phi, 0);
      if (r != 0) throw std::logic_error("wedge_window: basepoint not preserved");
      return 0;
    }
    int rest = w - 1;
    int summand = 1;
    while (rest >= static_cast<int>(src_sizes[static_cast<std::size_t>(summand - 1)]) - 1) {
      rest -= static_cast<int>(src_sizes[static_cast<std::size_t>(summand - 1)]) - 1;
      ++summand;
    }
    int r = (*shared)[static_cast<std::size_t>(summand - 1)].apply(phi, rest + 1);
    return wedge_index(dst_sizes, summand, r);
  };
  return GammaSetWindow(levels, keys, action);
}

GammaSetWindow wedge_window(const GammaSetWindow& x, const GammaSetWindow& y) {
  return wedge_window(std::vector<GammaSetWindow>{x, y});
}

Plasma truncate_to_plasma(const GammaSetWindow& x) {
  if (x.levels() < 2) throw std::invalid_argument("truncate_to_plasma: window too small");
  const int c = static_cast<int>(x.level_size(1));
  if (c > 64) throw std::invalid_argument("truncate_to_plasma: carrier too large");
  const PointedMap first{2, 1, {0, 1, 0}};
  const PointedMap second{2, 1, {0, 0, 1}};
  const PointedMap fold = PointedMap::fold(2);

  Plasma p;
  p.size = c;
  p.identity = 0;
  p.table.assign(static_cast<std::size_t>(c) * c, 0);
  for (int z = 0; z < static_cast<int>(x.level_size(2)); ++z) {
    int a = x.apply(first, z), b = x.apply(second, z), s = x.apply(fold, z);
    p.at(a, b) |= CarrierSet{1} << s;
  }
  return p;
}

MorphismTable unit_component(const GammaSetWindow& x, int n, int elem) {
  MorphismTable t(std::size_t{1} << n);
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    t[a] = x.apply(characteristic_map(n, a), elem);
  return t;
}

UnitLevelReport unit_report(const GammaSetWindow& x, int n) {
  UnitLevelReport r;
  const Plasma target = truncate_to_plasma(x);
  const Plasma source = powerset_plasma(n);
  std::set<MorphismTable> seen;
  for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e) {
    MorphismTable t = unit_component(x, n, e);
    if (!is_plasma_morphism(t, source, target)) r.components_are_morphisms = false;
    if (!seen.insert(t).second) r.injective = false;
    r.image.push_back(std::move(t));
  }
  std::vector<MorphismTable> hom = enumerate_morphisms(source, target);
  r.hom_size = hom.size();
  r.image_size = seen.size();
  for (const MorphismTable& h : hom)
    if (!seen.count(h)) r.missed.push_back(h);
  r.surjective = r.missed.empty();
  return r;
}

NaturalMap phi_natural_iso(const GammaSetWindow& hk, const GammaSetWindow& dw) {
  if (hk.levels() != dw.levels()) throw std::invalid_argument("phi_natural_iso: level mismatch");
  NaturalMap nat{hk.levels(), {}};
  for (int n = 0; n <= hk.levels(); ++n) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < dw.level_size(n); ++i)
      index.emplace(dw.keys(n)[i], static_cast<int>(i));
    std::vector<int> comp;
    for (const std::string& key : hk.keys(n)) {
      DynkinSystem d = phi(kappa(decode_table(key), n));
      auto it = index.find(d.family.to_hex());
      if (it == index.end()) throw std::logic_error("phi_natural_iso: image outside target window");
      comp.push_back(it->second);
    }
    nat.components.push_back(std::move(comp));
  }
  return nat;
}

void for_each_window_map(int levels, int exhaustive_cap, unsigned seed, int samples,
                         const std::function<void(const PointedMap&)>& visit) {
  const int cap = std::min(levels, exhaustive_cap);
  for (int n = 0; n <= cap; ++n)
    for (int m = 0; m <= cap; ++m)
      for (const PointedMap& phi : enumerate_pointed_maps(n, m)) visit(phi);
  if (levels <= exhaustive_cap) return;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> level_dist(0, levels);
  for (int s = 0; s < samples; ++s) {
    int n = level_dist(rng), m = level_dist(rng);
    if (std::max(n, m) <= exhaustive_cap) {
      n = levels;  // force the sample to touch the unswept levels
    }
    PointedMap phi = PointedMap::constant_zero(n, m);
    std::uniform_int_distribution<int> value_dist(0, m);
    for (int k = 1; k <= n; ++k) phi.table[static_cast<std::size_t>(k)] = value_dist(rng);
    visit(phi);
  }
}

CheckResult check_functoriality(const GammaSetWindow& x, int exhaustive_cap, unsigned seed,
                                int samples) {
  CheckResult r;
  for (int n = 0; n <= x.levels(); ++n) {
    const PointedMap id = PointedMap::identity(n);
    for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e)
      if (x.apply(id, e) != e)
        r.fail("identity not preserved", {{"level", n}, {"elem", e}});
  }
  // basepoints are fixed by every map in the window
  for_each_window_map(x.levels(), exhaustive_cap, seed, samples, [&](const PointedMap& phi) {
    if (x.apply(phi, 0) != 0) r.fail("basepoint not preserved", {{"map", phi.encode()}});
  });
  // composition, exhaustively on the low levels
  const int cap = std::min(x.levels(), exhaustive_cap);
  for (int n = 0; n <= cap; ++n)
    for (int m = 0; m <= cap; ++m)
      for (int l = 0; l <= cap; ++l)
        for (const PointedMap& f : enumerate_pointed_maps(n, m))
          for (const PointedMap& g : enumerate_pointed_maps(m, l))
            for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e)
              if (x.apply(compose(g, f), e) != x.apply(g, x.apply(f, e)))
                r.fail("composition violated", {{"f", f.encode()}, {"g", g.encode()}, {"elem", e}});
  // sampled composable pairs through the higher levels
  if (x.levels() > exhaustive_cap) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> level_dist(0, x.levels());
    for (int s = 0; s < samples; ++s) {
      int n = x.levels(), m = level_dist(rng), l = level_dist(rng);
      auto random_map = [&](int a, int b) {
        PointedMap phi = PointedMap::constant_zero(a, b);
        std::uniform_int_distribution<int> value_dist(0, b);
        for (int k = 1; k <= a; ++k) phi.table[static_cast<std::size_t>(k)] = value_dist(rng);
        return phi;
      };
      PointedMap f = random_map(n, m), g = random_map(m, l);
      for (int e = 0; e < static_cast<int>(x.level_size(n)); ++e)
        if (x.apply(compose(g, f), e) != x.apply(g, x.apply(f, e)))
          r.fail("composition violated", {{"f", f.encode()}, {"g", g.encode()}, {"elem", e}});
    }
  }
  r.details["claim"] = "functoriality";
  return r;
}

CheckResult check_naturality(const GammaSetWindow& x, const GammaSetWindow& y,
                             const NaturalMap& nat, int exhaustive_cap, unsigned seed,
                             int samples) {
  CheckResult r;
  if (x.levels() != y.levels() || nat.levels != x.levels()) {
    r.fail("window level mismatch");
    return r;
  }
  for (int n = 0; n <= x.levels(); ++n) {
    if (nat.components[static_cast<std::size_t>(n)].size() != x.level_size(n))
      r.fail("component size mismatch", {{"level", n}});
    if (!nat.components[static_cast<std::size_t>(n)].empty() &&
        nat.components[static_cast<std::size_t>(n)][0] != 0)
      r.fail("component not pointed", {{"level", n}});
  }
  if (!r.pass) return r;
  for_each_window_map(x.levels(), exhaustive_cap, seed, samples, [&](const PointedMap& phi) {
    const auto& src_comp = nat.components[static_cast<std::size_t>(phi.src)];
    const auto& dst_comp = nat.components[static_cast<std::size_t>(phi.dst)];
    for (int e = 0; e < static_cast<int>(x.level_size(phi.src)); ++e)
      if (dst_comp[static_cast<std::size_t>(x.apply(phi, e))] !=
          y.apply(phi, src_comp[static_cast<std::size_t>(e)]))
        r.fail("naturality square does not commute", {{"map", phi.encode()}, {"elem", e}});
  });
  r.details["claim"] = "naturality";
  return r;
}

CheckResult check_unit(const GammaSetWindow& x, bool expect_surjective) {
  CheckResult r;
  nlohmann::json levels = nlohmann::json::array();
  NaturalMap nat{x.levels(), {}};
  const Plasma target_plasma = truncate_to_plasma(x);
  GammaSetWindow target = h_hat(target_plasma, x.levels());
  for (int n = 0; n <= x.levels(); ++n) {
    UnitLevelReport rep = unit_report(x, n);
    if (!rep.components_are_morphisms) r.fail("unit component is not a plasma morphism", {{"level", n}});
    if (!rep.injective) r.fail("unit not injective", {{"level", n}});
    if (expect_surjective && !rep.surjective) r.fail("unit not surjective", {{"level", n}});
    levels.push_back({{"level", n},
                      {"image_size", rep.image_size},
                      {"hom_size", rep.hom_size},
                      {"surjective", rep.surjective}});
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < target.level_size(n); ++i)
      index.emplace(target.keys(n)[i], static_cast<int>(i));
    std::vector<int> comp;
    for (const MorphismTable& t : rep.image) comp.push_back(index.at(encode_table(t)));
    nat.components.push_back(std::move(comp));
  }
  CheckResult naturality = check_naturality(x, target, nat);
  if (!naturality.pass) r.fail("unit components are not natural", naturality.details);
  r.details["claim"] = "unit";
  r.details["levels"] = levels;
  return r;
}

CheckResult check_theorem_projective(int levels, int k) {
  CheckResult r;
  if (levels > 3 || k > 3) throw std::invalid_argument("check_theorem_projective: levels <= 3, k <= 3");
  GammaSetWindow hw = h_hat(wedge_krasner(k), levels);
  GammaSetWindow dw = dynk_window(levels);
  GammaSetWindow ww = wedge_window(std::vector<GammaSetWindow>(static_cast<std::size_t>(k), dw));

  const Plasma source_check = powerset_plasma(0);  // silences unused warnings in release
  (void)source_check;

  NaturalMap nat{levels, {}};
  nlohmann::json level_info = nlohmann::json::array();
  for (int n = 0; n <= levels; ++n) {
    const std::size_t dyn = dw.level_size(n);
    const std::size_t expected = static_cast<std::size_t>(k) * (dyn - 1) + 1;
    if (hw.level_size(n) != expected || ww.level_size(n) != expected)
      r.fail("wedge count identity violated",
             {{"level", n}, {"hw", hw.level_size(n)}, {"ww", ww.level_size(n)}, {"expected", expected}});
    level_info.push_back({{"level", n}, {"size", hw.level_size(n)}, {"expected", expected}});

    std::unordered_map<std::string, int> dyn_index;
    for (std::size_t i = 0; i < dyn; ++i) dyn_index.emplace(dw.keys(n)[i], static_cast<int>(i));
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), dyn);

    std::vector<int> comp;
    std::vector<bool> hit(ww.level_size(n), false);
    const Plasma source = powerset_plasma(n);
    for (const std::string& key : hw.keys(n)) {
      MorphismTable f = decode_table(key);
      int summand = factor_wedge_morphism(f, source, k);
      int target;
      if (summand == 0) {
        target = 0;
      } else {
        MorphismTable g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i] ? 1 : 0;
        int d = dyn_index.at(phi(kappa(g, n)).family.to_hex());
        target = wedge_index(sizes, summand, d);
      }
      if (hit[static_cast<std::size_t>(target)])
        r.fail("candidate isomorphism not injective", {{"level", n}, {"elem", key}});
      hit[static_cast<std::size_t>(target)] = true;
      comp.push_back(target);
    }
    nat.components.push_back(std::move(comp));
  }
  if (r.pass) {
    CheckResult naturality = check_naturality(hw, ww, nat);
    if (!naturality.pass) r.fail("wedge comparison is not natural", naturality.details);
  }
  r.details["claim"] = "projective-module";
  r.details["levels"] = level_info;
  r.details["k"] = k;
  return r;
}

}  // namespace f1m
