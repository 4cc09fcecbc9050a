#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "f1m/simplicial.hpp"

using namespace f1m;

TEST_CASE("structure maps on small indices") {
  CHECK(face_map(2, 1).table == std::vector<int>{0, 1, 1});  // the fold
  CHECK(face_map(2, 0).table == std::vector<int>{0, 0, 1});
  CHECK(face_map(2, 2).table == std::vector<int>{0, 1, 0});
  CHECK(face_map(3, 2).table == std::vector<int>{0, 1, 2, 2});
  CHECK(degeneracy_map(1, 0).table == std::vector<int>{0, 2});  // skips 1
  CHECK(degeneracy_map(2, 1).table == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(face_map(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(degeneracy_map(2, -1), std::invalid_argument);
}

TEST_CASE("simplicial identities hold on all four windows") {
  CHECK(check_simplicial_identities(deloop(dynk_window(4))).pass);
  CHECK(check_simplicial_identities(deloop(part_window(4))).pass);
  CHECK(check_simplicial_identities(deloop(h_hat(krasner(), 4))).pass);
  CHECK(check_simplicial_identities(deloop(h_hat(wedge_krasner(2), 3))).pass);
}

TEST_CASE("level sizes and degeneracies of the Krasner delooping") {
  SimplicialWindow w = deloop(h_hat(krasner(), 3));
  CHECK(w.level_size(0) == 1);
  CHECK(w.level_size(1) == 2);
  CHECK(w.level_size(2) == 5);
  CHECK(w.level_size(3) == 19);
  // one of the two 1-simplices is degenerate: the circle
  int degenerate = 0;
  for (int e = 0; e < 2; ++e)
    if (w.is_degenerate(1, e)) ++degenerate;
  CHECK(degenerate == 1);
  CHECK(deloop(part_window(3)).level_size(3) == 15);
}

TEST_CASE("the five 2-simplices classify as A through E") {
  SimplicialWindow w = deloop(h_hat(krasner(), 2));
  std::vector<char> labels = classify_2simplices(w);
  REQUIRE(labels.size() == 5);
  CHECK(labels[0] == 'A');  // the basepoint is the zero morphism
  std::multiset<char> seen(labels.begin(), labels.end());
  CHECK(seen == std::multiset<char>{'A', 'B', 'C', 'D', 'E'});

  // boundary triples straight from the captions: 0+0=0 ... 1+1=1
  std::map<char, std::array<int, 3>> expected{
      {'A', {0, 0, 0}}, {'B', {0, 1, 1}}, {'C', {1, 0, 1}}, {'D', {1, 1, 0}}, {'E', {1, 1, 1}}};
  for (std::size_t e = 0; e < 5; ++e) {
    MorphismTable f = decode_table(w.keys[2][e]);
    CHECK(f[0b01] == expected[labels[e]][0]);
    CHECK(f[0b10] == expected[labels[e]][1]);
    CHECK(f[0b11] == expected[labels[e]][2]);
  }
}

TEST_CASE("graded-lex subset order") {
  CHECK(graded_lex_masks(3) == std::vector<Mask>{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
  // first point where it departs from numeric order: {1,4} before {2,3}
  std::vector<Mask> g4 = graded_lex_masks(4);
  auto pos = [&](Mask m) { return std::find(g4.begin(), g4.end(), m) - g4.begin(); };
  CHECK(pos(0b1001) < pos(0b0110));
  CHECK(0b1001 > 0b0110);
}

TEST_CASE("tuple encoding round trips") {
  for (int n = 0; n <= 4; ++n)
    for (const std::string& t : simplex_tuples(n)) CHECK(tuple_of_table(table_of_tuple(t, n), n) == t);
  CHECK_THROWS_AS(table_of_tuple("0120", 2), std::invalid_argument);
}

TEST_CASE("the 19 level-3 tuples") {
  std::vector<std::string> tuples = simplex_tuples(3);
  REQUIRE(tuples.size() == 19);
  for (const std::string& t : tuples) CHECK(t[0] == '0');
  std::set<std::string> s(tuples.begin(), tuples.end());
  CHECK(s.count("00000000"));
  CHECK(s.count("01011010"));
  CHECK(s.count("00111100"));
  CHECK(s.count("01100110"));
  CHECK(s.count("01111110"));
  CHECK(s.count("00010111"));
  CHECK(s.count("01110111"));
  CHECK(s.count("01111111"));
}

TEST_CASE("exactly four level-3 tuples are not partitions") {
  std::set<std::string> not_partitions;
  for (const std::string& t : simplex_tuples(3)) {
    DynkinSystem d = phi(kappa(table_of_tuple(t, 3), 3));
    if (!is_intersection_closed(d)) not_partitions.insert(t);
  }
  CHECK(not_partitions == std::set<std::string>{"01110001", "01111001", "01110101", "01110011"});
}

TEST_CASE("face labels of the paper's example 3-simplex") {
  // (01011010) has boundary 2-simplices C, B, D, D in some face order
  GammaSetWindow hk = h_hat(krasner(), 3);
  SimplicialWindow w = deloop(hk);
  std::vector<char> labels = classify_2simplices(w);
  int idx = -1;
  for (int e = 0; e < static_cast<int>(w.level_size(3)); ++e)
    if (tuple_of_table(decode_table(w.keys[3][static_cast<std::size_t>(e)]), 3) == "01011010") idx = e;
  REQUIRE(idx >= 0);
  std::multiset<char> faces;
  for (int i = 0; i <= 3; ++i)
    faces.insert(labels[static_cast<std::size_t>(w.faces[3][static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)])]);
  CHECK(faces == std::multiset<char>{'B', 'C', 'D', 'D'});

  // and the zero 3-simplex has all faces A
  int zero = -1;
  for (int e = 0; e < static_cast<int>(w.level_size(3)); ++e)
    if (tuple_of_table(decode_table(w.keys[3][static_cast<std::size_t>(e)]), 3) == "00000000") zero = e;
  REQUIRE(zero >= 0);
  for (int i = 0; i <= 3; ++i)
    CHECK(labels[static_cast<std::size_t>(w.faces[3][static_cast<std::size_t>(i)][static_cast<std::size_t>(zero)])] == 'A');
}

TEST_CASE("associator relation") {
  CHECK(check_associator("00000000"));
  CHECK(check_associator("01110001"));
  int morphisms = 0;
  for (int v = 0; v < 256; ++v) {
    std::string t;
    for (int j = 0; j < 8; ++j) t += static_cast<char>('0' + ((v >> j) & 1));
    bool morphism = is_plasma_morphism(table_of_tuple(t, 3), powerset_plasma(3), krasner());
    if (morphism) {
      ++morphisms;
      CHECK(check_associator(t));  // every valid tuple satisfies the relation
    }
  }
  CHECK(morphisms == 19);
  CHECK_THROWS_AS(check_associator("0101"), std::invalid_argument);
}

TEST_CASE("inner faces act on partitions by merging blocks") {
  CHECK(face_action_on_partitions(2, 1, all_singletons(2)) ==
        partition_from_labels({1, 2}));  // {{0},{1}}
  CHECK(face_action_on_partitions(2, 1, partition_from_labels({1, 1, 2})) ==
        partition_from_labels({1, 1}));  // {{0,1}}
  CHECK(face_action_on_partitions(3, 2, all_singletons(3)) == all_singletons(2));
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (const Partition& p : enumerate_partitions(n))
        CHECK(is_valid_partition(face_action_on_partitions(n, i, p)));
  CHECK_THROWS_AS(face_action_on_partitions(3, 0, all_singletons(3)), std::invalid_argument);
}

TEST_CASE("degeneracies of partition windows insert a singleton block") {
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Partition& p : enumerate_partitions(n)) {
        Partition q = part_map(degeneracy_map(n, i), p);
        CHECK(q.blocks.size() == p.blocks.size() + 1);
        // the new block is the singleton {i+1}
        bool found = false;
        for (Mask b : q.blocks) found |= (b == (Mask{1} << (i + 1)));
        CHECK(found);
      }
}

TEST_CASE("the deloopings of the Krasner and Dynkin windows are isomorphic") {
  GammaSetWindow hk = h_hat(krasner(), 4);
  GammaSetWindow dw = dynk_window(4);
  NaturalMap nat = phi_natural_iso(hk, dw);
  SimplicialWindow a = deloop(hk);
  SimplicialWindow b = deloop(dw);
  for (int n = 0; n <= 4; ++n) {
    const auto& comp = nat.components[static_cast<std::size_t>(n)];
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        for (int e = 0; e < static_cast<int>(a.level_size(n)); ++e) {
          const auto& lower = nat.components[static_cast<std::size_t>(n) - 1];
          CHECK(lower[static_cast<std::size_t>(a.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(e)])] ==
                b.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(comp[static_cast<std::size_t>(e)])]);
        }
    if (n < 4)
      for (int i = 0; i <= n; ++i)
        for (int e = 0; e < static_cast<int>(a.level_size(n)); ++e) {
          const auto& upper = nat.components[static_cast<std::size_t>(n) + 1];
          CHECK(upper[static_cast<std::size_t>(a.degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(e)])] ==
                b.degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(comp[static_cast<std::size_t>(e)])]);
        }
  }
}

TEST_CASE("json export round trips and dot has the circle shape") {
  SimplicialWindow w = deloop(h_hat(krasner(), 2));
  CHECK(import_json(export_json(w)) == w);
  std::string dot = export_dot(w);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 0);
  std::size_t arrows = 0, triangles = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) { ++arrows; pos += 4; }
  pos = 0;
  while ((pos = dot.find("triangle", pos)) != std::string::npos) { ++triangles; pos += 8; }
  CHECK(arrows == 1);     // one non-degenerate loop
  CHECK(triangles == 5);  // the five 2-simplices
}
