#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "f1m/dynkin.hpp"
#include "f1m/kzengine.hpp"
#include "f1m/plasma.hpp"

using namespace f1m;

TEST_CASE("axiom validators") {
  for (int n = 0; n <= 3; ++n) CHECK(validate_dynkin(full_powerset_system(n).family, n));

  // {emptyset, {1}} on <1>: not complement-closed
  SetFamily bad(2);
  bad.set(0b00);
  bad.set(0b10);
  CHECK_FALSE(validate_dynkin(bad, 1));

  // minimal system {emptyset, {0,1}}
  SetFamily minimal(2);
  minimal.set(0b00);
  minimal.set(0b11);
  CHECK(validate_dynkin(minimal, 1));

  // KZ side: {emptyset} and {emptyset,{1}} are systems; adding {2} without
  // {1,2} breaks closure under disjoint unions
  SetFamily kz0(2);
  kz0.set(0b00);
  CHECK(validate_kz(kz0, 2));
  SetFamily kz1(2);
  kz1.set(0b00);
  kz1.set(0b01);
  CHECK(validate_kz(kz1, 2));
  SetFamily kz2 = kz1;
  kz2.set(0b10);
  CHECK_FALSE(validate_kz(kz2, 2));
}

TEST_CASE("backtracking counts match the known sequence") {
  const std::uint64_t expected[] = {1, 2, 5, 19, 137, 3708};
  for (int n = 0; n <= 5; ++n) {
    CHECK(count_dynkin(n) == expected[n]);
    CHECK(count_kz(n) == expected[n]);
  }
}

TEST_CASE("every enumerated system validates; output is sorted") {
  for (int n = 0; n <= 4; ++n) {
    auto all = enumerate_dynkin(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(validate_dynkin(all[i].family, n));
      if (i) CHECK(all[i - 1] < all[i]);
    }
  }
}

TEST_CASE("engines agree set-for-set") {
  for (int n = 0; n <= 3; ++n) {
    auto bt = enumerate_dynkin(n);
    auto oa = enumerate_dynkin_oracle(n, DynkinOracle::kAxiomScan);
    CHECK(bt == oa);
  }
  for (int n = 0; n <= 4; ++n) {
    auto bt = enumerate_dynkin(n);
    auto ob = enumerate_dynkin_oracle(n, DynkinOracle::kMorphismScan);
    CHECK(bt == ob);
  }
}

TEST_CASE("thread count does not change enumeration output") {
  CHECK(enumerate_kz(5, 1) == enumerate_kz(5, 4));
  CHECK(enumerate_dynkin(4, {7, 1}) == enumerate_dynkin(4, {7, 3}));
  CHECK(enumerate_dynkin_oracle(4, DynkinOracle::kMorphismScan, false, 1) ==
        enumerate_dynkin_oracle(4, DynkinOracle::kMorphismScan, false, 4));
}

TEST_CASE("kappa pairs morphisms with KZ-systems") {
  for (int n = 0; n <= 4; ++n) {
    auto homs = enumerate_morphisms(powerset_plasma(n), krasner());
    std::set<KZSystem> seen;
    for (const auto& f : homs) {
      KZSystem x = kappa(f, n);
      CHECK(validate_kz(x.family, n));
      CHECK(kappa_inverse(x) == f);
      CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == count_kz(n));
  }
}

TEST_CASE("phi and psi are mutually inverse bijections") {
  for (int n = 0; n <= 4; ++n) {
    std::set<DynkinSystem> image;
    for (const SetFamily& fam : enumerate_kz(n)) {
      KZSystem x{n, fam};
      DynkinSystem d = phi(x);
      CHECK(validate_dynkin(d.family, n));
      CHECK(psi(d) == x);
      CHECK(image.insert(d).second);
    }
    CHECK(image.size() == count_dynkin(n));
    for (const DynkinSystem& d : enumerate_dynkin(n)) CHECK(phi(psi(d)) == d);
  }
}

TEST_CASE("phi turns the kernel bijection into the Dynkin bijection") {
  for (int n = 0; n <= 4; ++n) {
    std::set<DynkinSystem> image;
    for (const auto& f : enumerate_morphisms(powerset_plasma(n), krasner()))
      image.insert(phi(kappa(f, n)));
    auto all = enumerate_dynkin(n);
    CHECK(image == std::set<DynkinSystem>(all.begin(), all.end()));
  }
}

TEST_CASE("dynk_map is functorial and matches precomposition under kappa") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& map : enumerate_pointed_maps(n, m)) {
        for (const auto& f : enumerate_morphisms(powerset_plasma(n), krasner())) {
          // naturality: push the kernel forward, or pull the morphism back
          MorphismTable g = compose_morphisms(f, powerset_contravariant_map(map));
          CHECK(phi(kappa(g, m)) == dynk_map(map, phi(kappa(f, n))));
        }
        for (const auto& d : enumerate_dynkin(n)) {
          CHECK(validate_dynkin(dynk_map(map, d).family, m));
          CHECK(dynk_map(PointedMap::identity(n), d) == d);
        }
      }
}

TEST_CASE("intersection closure singles out the sigma-algebras at n = 3") {
  int closed = 0, open = 0;
  for (const DynkinSystem& d : enumerate_dynkin(3)) (is_intersection_closed(d) ? closed : open)++;
  CHECK(closed == 15);
  CHECK(open == 4);
}
