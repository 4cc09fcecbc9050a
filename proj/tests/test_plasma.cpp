#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "f1m/plasma.hpp"

using namespace f1m;

TEST_CASE("the two 2-element plasmas") {
  Plasma k = krasner();
  CHECK(satisfies_plasma_axioms(k));
  CHECK(k.at(0, 0) == 0b01);
  CHECK(k.at(0, 1) == 0b10);
  CHECK(k.at(1, 0) == 0b10);
  CHECK(k.at(1, 1) == 0b11);  // 1+1 = {0,1}
  CHECK(is_krasner(k));

  Plasma fp = free_point_plasma();
  CHECK(satisfies_plasma_axioms(fp));
  CHECK(fp.at(1, 1) == 0);  // 1+1 = empty
  CHECK_FALSE(is_krasner(fp));
}

TEST_CASE("power set plasma") {
  for (int n = 0; n <= 4; ++n) {
    Plasma p = powerset_plasma(n);
    CHECK(p.size == (1 << n));
    CHECK(satisfies_plasma_axioms(p));
    int got = -1;
    CHECK(is_powerset_plasma(p, &got));
    CHECK(got == n);
    for (int a = 0; a < p.size; ++a)
      for (int b = 0; b < p.size; ++b) {
        if (a & b) CHECK(p.at(a, b) == 0);
        else CHECK(p.at(a, b) == (CarrierSet{1} << (a | b)));
      }
  }
  CHECK_FALSE(is_powerset_plasma(krasner(), nullptr));  // 1+1 too big
}

TEST_CASE("coproduct identifies identities and kills cross sums") {
  CoproductResult c = coproduct_with_inclusions(krasner(), krasner());
  CHECK(c.plasma.size == 3);
  CHECK(satisfies_plasma_axioms(c.plasma));
  CHECK(c.plasma.at(1, 2) == 0);
  CHECK(c.plasma.at(2, 2) == (CarrierSet{0b101}));  // {0, 2}
  CHECK(is_plasma_morphism(c.incl_left, krasner(), c.plasma));
  CHECK(is_plasma_morphism(c.incl_right, krasner(), c.plasma));

  CHECK(wedge_krasner(1) == krasner());
  for (int k = 1; k <= 4; ++k) {
    int got = -1;
    CHECK(is_wedge_of_krasner(wedge_krasner(k), &got));
    CHECK(got == k);
    CHECK(satisfies_plasma_axioms(wedge_krasner(k)));
  }
}

TEST_CASE("prime field quotients") {
  for (int p : {3, 5, 7}) {
    Plasma q = quotient_plasma_prime_field(p);
    CHECK(satisfies_plasma_axioms(q));
    CHECK(q.size == 2);
    CHECK(are_isomorphic(q, krasner()).has_value());
  }
  Plasma q2 = quotient_plasma_prime_field(2);
  CHECK(satisfies_plasma_axioms(q2));
  CHECK_FALSE(are_isomorphic(q2, krasner()).has_value());
  CHECK_THROWS_AS(quotient_plasma_prime_field(4), std::invalid_argument);
}

TEST_CASE("morphism predicate and composition") {
  Plasma k = krasner();
  MorphismTable id = identity_morphism(k);
  CHECK(is_plasma_morphism(id, k, k));
  CHECK(compose_morphisms(id, id) == id);

  // collapsing K to a point is a morphism; swapping 0 and 1 is not
  CHECK(is_plasma_morphism({0, 0}, k, k));
  CHECK_FALSE(is_plasma_morphism({1, 0}, k, k));
}

TEST_CASE("morphism enumeration is sorted and correct by brute force") {
  Plasma k = krasner();
  for (int n = 0; n <= 3; ++n) {
    Plasma p = powerset_plasma(n);
    auto homs = enumerate_morphisms(p, k);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      CHECK(is_plasma_morphism(homs[i], p, k));
      CHECK(homs[i][0] == 0);
      if (i) CHECK(homs[i - 1] < homs[i]);
    }
    // independent scan over all identity-preserving value tables
    std::size_t brute = 0;
    MorphismTable f(static_cast<std::size_t>(p.size), 0);
    const std::uint64_t total = std::uint64_t{1} << (p.size - 1);
    for (std::uint64_t w = 0; w < total; ++w) {
      for (int i = 1; i < p.size; ++i) f[static_cast<std::size_t>(i)] = static_cast<int>((w >> (i - 1)) & 1u);
      if (is_plasma_morphism(f, p, k)) ++brute;
    }
    CHECK(homs.size() == brute);
  }
}

TEST_CASE("morphisms into the free point differ from K at n = 2") {
  auto into_k = enumerate_morphisms(powerset_plasma(2), krasner());
  auto into_fp = enumerate_morphisms(powerset_plasma(2), free_point_plasma());
  CHECK(into_k.size() == 5);
  CHECK(into_fp.size() == 3);  // f({1})=f({2})=1 leaves no value for f({1,2})
}

TEST_CASE("contravariant power set morphisms") {
  for (const auto& phi : enumerate_pointed_maps(2, 3)) {
    MorphismTable f = powerset_contravariant_map(phi);
    CHECK(is_plasma_morphism(f, powerset_plasma(3), powerset_plasma(2)));
  }
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(krasner(), krasner()).has_value());
  CHECK_FALSE(are_isomorphic(krasner(), free_point_plasma()).has_value());
  CHECK_FALSE(are_isomorphic(wedge_krasner(2), powerset_plasma(2)).has_value());
  auto iso = are_isomorphic(wedge_krasner(3), wedge_krasner(3));
  REQUIRE(iso.has_value());
  CHECK((*iso)[0] == 0);
}

TEST_CASE("factoring wedge-valued morphisms") {
  Plasma p = powerset_plasma(2);
  for (const auto& f : enumerate_morphisms(p, wedge_krasner(2))) {
    int s = factor_wedge_morphism(f, p, 2);
    bool zero = std::all_of(f.begin(), f.end(), [](int v) { return v == 0; });
    if (zero) {
      CHECK(s == 0);
    } else {
      CHECK(s >= 1);
      CHECK(s <= 2);
      for (int v : f) CHECK((v == 0 || v == s));
    }
  }
}

TEST_CASE("KZ route and generic route agree on wedge targets") {
  Plasma p = powerset_plasma(3);
  Plasma w = wedge_krasner(2);
  EnumOptions generic;           // 5^7 well under the default budget
  EnumOptions forced{1.0, 1};    // force the specialized route
  CHECK(enumerate_morphisms(p, w, generic) == enumerate_morphisms(p, w, forced));
  CHECK(enumerate_morphisms(p, krasner(), generic) == enumerate_morphisms(p, krasner(), forced));
}
