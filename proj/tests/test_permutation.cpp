#include <catch_amalgamated.hpp>

#include <popkit/permutation.hpp>

using namespace popkit;

TEST_CASE("permutation construction validates a bijection") {
  CHECK(Permutation{3, 1, 2}.size() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), invalid_input);
  CHECK_THROWS_AS(Permutation({0, 1}), invalid_input);
  CHECK_THROWS_AS(Permutation({1, 3}), invalid_input);
  CHECK(Permutation(std::vector<int>{}).empty());
}

TEST_CASE("parse and to_string") {
  CHECK(Permutation::parse("41253") == Permutation{4, 1, 2, 5, 3});
  CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK(Permutation{2, 1}.to_string() == "21");
  auto wide = Permutation::parse("2,1,3,4,5,6,7,8,9,10");
  CHECK(wide.to_string() == "2,1,3,4,5,6,7,8,9,10");
  CHECK(Permutation::parse(wide.to_string()) == wide);
  CHECK_THROWS_AS(Permutation::parse("112"), invalid_input);
}

TEST_CASE("reduce") {
  CHECK(reduce({7, 2, 9}) == Permutation{2, 1, 3});
  CHECK(reduce({-4, 10, 3, 0}) == Permutation{1, 4, 3, 2});
  CHECK(reduce(std::initializer_list<int>{}).empty());
  CHECK_THROWS_AS(reduce({5, 2, 5}), invalid_input);
}

TEST_CASE("trivial bijections") {
  const Permutation p{2, 4, 1, 3, 5};
  CHECK(complement(p) == Permutation{4, 2, 5, 3, 1});
  CHECK(reverse(p) == Permutation{5, 3, 1, 4, 2});
  CHECK(inverse(p) == Permutation{3, 1, 4, 2, 5});
  CHECK(inverse(inverse(p)) == p);
  CHECK(complement(complement(p)) == p);
  CHECK(reverse(reverse(p)) == p);
}

TEST_CASE("all_permutations is lexicographic and complete") {
  for (unsigned n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    std::optional<Permutation> prev;
    for (auto pi : all_permutations(n)) {
      if (prev) CHECK(*prev < pi);
      prev = pi;
      ++count;
    }
    std::size_t fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    CHECK(count == fact);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(all_permutations(13), resource_limit);
  CHECK_NOTHROW(all_permutations(13, EnumerationLimits{13}));
  CHECK_THROWS_AS(all_permutations(5, EnumerationLimits{4}), resource_limit);
}
