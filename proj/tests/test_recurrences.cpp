#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace popkit;

static std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

static std::vector<BigInt> slice(const std::vector<BigInt>& v, std::size_t from) { return {v.begin() + from, v.end()}; }

TEST_CASE("rational g.f. expansion") {
  CHECK(gf_coefficients({{1}, {1, -1, -1}}, 8).values == ints({1, 1, 2, 3, 5, 8, 13, 21, 34}));
  CHECK(gf_coefficients({{1}, {1, -2}}, 4).values == ints({1, 2, 4, 8, 16}));
  CHECK_THROWS_AS(gf_coefficients({{1}, {0, 1}}, 3), invalid_gf);
  CHECK_THROWS_AS(gf_coefficients({{1}, {2, 1}}, 3), invalid_gf);
  CHECK(gf_coefficients({{1}, {1, -1}}, 3).source == SequenceSource::gf_expansion);
}

TEST_CASE("b1 against its g.f. and brute force") {
  for (int k = 2; k <= 6; ++k) CHECK(gf_coefficients(gf_b1(k), 30).values == thm_b1(k, 30).values);
  for (int k = 3; k <= 5; ++k)
    CHECK(avoidance_sequence(complete_bipartite(k, {1}), 7).values == thm_b1(k, 7).values);
}

TEST_CASE("b2 against its g.f.") {
  for (int k = 4; k <= 8; ++k) CHECK(gf_coefficients(gf_b2(k), 30).values == thm_b2_recurrence(k, 30).values);
  CHECK(gf_coefficients(gf_cb4_pairs(), 30).values == thm_b2_recurrence(4, 30).values);
  CHECK_THROWS_AS(gf_b2(3), invalid_input);
}

TEST_CASE("interval recurrence with j = 1 is b2") {
  for (int k = 3; k <= 8; ++k) CHECK(thm_general1(k, 1, 20).values == thm_b2_recurrence(k, 20).values);
  CHECK_THROWS_AS(thm_general1(3, 2, 5), invalid_input);
}

TEST_CASE("interval recurrence against brute force") {
  for (auto [k, j] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 2}}) {
    const auto expected = thm_general1(k, j, 7).values;
    for (int i = 1; i + j <= k; ++i) {
      std::set<int> top;
      for (int a = i; a <= i + j; ++a) top.insert(a);
      INFO("k=" << k << " j=" << j << " i=" << i);
      CHECK(avoidance_sequence(complete_bipartite(k, top), 7).values == expected);
    }
  }
}

TEST_CASE("exceptional length-5 sequence") {
  CHECK(slice(thm_long_answer(8).values, 1) == ints({1, 2, 6, 24, 108, 504, 2364, 11052}));
  CHECK(avoidance_sequence(complete_bipartite(5, {1, 4}), 7).values == thm_long_answer(7).values);
}

TEST_CASE("N-pattern classes") {
  CHECK(slice(n_class1(7).values, 5) == ints({59, 180, 544}));
  CHECK(slice(n_class2(7).values, 5) == ints({60, 189, 595}));
  CHECK(slice(n_class3(7).values, 5) == ints({61, 196, 630}));
  for (unsigned n = 0; n <= 30; ++n) CHECK(n_class1(30).values[n] == n_class1_closed_form(n));
  for (unsigned n = 1; n <= 30; ++n) CHECK(n_class2(30).values[n] == n_class2_binomial_sum(n));
  CHECK(gf_coefficients(gf_n_class1(), 30).values == n_class1(30).values);
  CHECK(gf_coefficients(gf_n_class2(), 30).values == n_class2(30).values);
}

TEST_CASE("small disjoint chain patterns") {
  CHECK(avoidance_sequence(dc_small_pattern(SmallDc::p1), 8).values == dc_small(SmallDc::p1, 8).values);
  CHECK(avoidance_sequence(dc_small_pattern(SmallDc::p2), 8).values == dc_small(SmallDc::p2, 8).values);
  CHECK(slice(dc_small(SmallDc::p2, 8).values, 1) == ints({1, 2, 3, 5, 8, 13, 21, 34}));
}

TEST_CASE("theorem lookup and parameters") {
  CHECK(parse_theorem_id("b2") == TheoremId::b2);
  CHECK(parse_theorem_id("dc-p2-fibonacci") == TheoremId::dc_p2_fibonacci);
  CHECK_FALSE(parse_theorem_id("nope").has_value());
  for (const auto& t : theorem_table) CHECK(parse_theorem_id(t.name) == t.id);
  CHECK(theorem_sequence(TheoremId::b2, {4, {}}, 5).pattern == "b2:k=4");
  CHECK_THROWS_AS(theorem_sequence(TheoremId::b2, {}, 5), invalid_input);
  CHECK_THROWS_AS(theorem_sequence(TheoremId::cb_interval, {5, {}}, 5), invalid_input);
  CHECK_THROWS_AS(theorem_sequence(TheoremId::cb_gap2, {2, {}}, 5), invalid_input);
  CHECK(theorem_sequence(TheoremId::n_class3, {}, 3).values == ints({1, 1, 2, 6}));
}
