#include <catch_amalgamated.hpp>

#include <popkit/poset.hpp>

using namespace popkit;

TEST_CASE("relations are transitively closed") {
  auto p = Poset::from_relations(4, {{1, 2}, {2, 3}});
  CHECK(p.less(1, 3));
  CHECK_FALSE(p.less(3, 1));
  CHECK_FALSE(p.less(1, 4));
  CHECK(p.relations() == std::vector<Relation>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(p.covers() == std::vector<Relation>{{1, 2}, {2, 3}});
  CHECK(canonical_form(p) == "rel:4:{(1,2),(2,3)}");
}

TEST_CASE("invalid relations") {
  CHECK_THROWS_AS(Poset::from_relations(3, {{1, 4}}), invalid_input);
  CHECK_THROWS_AS(Poset::from_relations(3, {{1, 2}, {2, 3}, {3, 1}}), invalid_poset);
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 1}}), invalid_poset);
  CHECK_THROWS_AS(Poset(65), invalid_input);
  CHECK_NOTHROW(Poset(64));
}

TEST_CASE("chain follows the word") {
  auto p = chain(Permutation{2, 1, 3});
  CHECK(p.less(2, 1));
  CHECK(p.less(1, 3));
  CHECK(p.covers() == std::vector<Relation>{{1, 3}, {2, 1}});
}

TEST_CASE("complete bipartite") {
  auto p = complete_bipartite(4, {1, 2});
  CHECK(p.relations() == std::vector<Relation>{{3, 1}, {3, 2}, {4, 1}, {4, 2}});
  CHECK(is_bipartite(p));
  CHECK_THROWS_AS(complete_bipartite(4, {}), invalid_input);
  CHECK_THROWS_AS(complete_bipartite(3, {1, 2, 3}), invalid_input);
  CHECK_THROWS_AS(complete_bipartite(3, {5}), invalid_input);
}

TEST_CASE("N-pattern and zigzag") {
  // n:3124 climbs 3->1, drops to 2, climbs to 4.
  auto p = n_pattern(Permutation{3, 1, 2, 4});
  CHECK(p.covers() == std::vector<Relation>{{2, 1}, {2, 4}, {3, 1}});
  CHECK(is_bipartite(p));
  CHECK_THROWS_AS(zigzag(Permutation{1, 2, 3}, "^^"), invalid_input);
  CHECK_THROWS_AS(zigzag(Permutation{1, 2, 3}, "^"), invalid_input);
  CHECK_THROWS_AS(zigzag(Permutation{1, 2, 3}, "^x"), invalid_input);
  CHECK_THROWS_AS(n_pattern(Permutation{1, 2, 3}), invalid_input);
}

TEST_CASE("vertical flip of an N-pattern reverses its word") {
  for (auto w : all_permutations(4)) {
    auto r = reverse(w);
    CHECK(vertical_flip(n_pattern(w)) == n_pattern(r));
  }
}

TEST_CASE("disjoint chains list labels top to bottom") {
  auto p = dc_pop({{1, 2}, {4, 3}, {6, 5}});
  CHECK(p.covers() == std::vector<Relation>{{2, 1}, {3, 4}, {5, 6}});
  CHECK(dc_pop({{1, 2, 3}, {2, 1}}) == dc_pop({{1, 2, 3}, {5, 4}}));
  CHECK_THROWS_AS(dc_pop({{1, 3}}), invalid_input);
  CHECK_THROWS_AS(dc_pop({}), invalid_input);
  CHECK_THROWS_AS(dc_pop({{}}), invalid_input);
}

TEST_CASE("symmetries are involutions") {
  auto p = Poset::from_relations(5, {{1, 3}, {4, 3}, {4, 2}, {5, 2}});
  CHECK(label_complement(label_complement(p)) == p);
  CHECK(vertical_flip(vertical_flip(p)) == p);
  CHECK(label_complement(p).less(5, 3));
  CHECK(vertical_flip(p).less(3, 1));
}

TEST_CASE("bipartite detection") {
  CHECK(is_bipartite(antichain(3)));
  CHECK_FALSE(is_bipartite(chain(Permutation{1, 2, 3})));
  CHECK(is_bipartite(chain(Permutation{2, 1})));
}
