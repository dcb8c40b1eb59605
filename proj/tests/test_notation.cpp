#include <catch_amalgamated.hpp>

#include <popkit/popkit.hpp>

#include <random>

using namespace popkit;

TEST_CASE("each kind builds the expected poset") {
  CHECK(parse_poset("chain:213") == chain(Permutation{2, 1, 3}));
  CHECK(parse_poset("cb:5:{4,1}") == complete_bipartite(5, {1, 4}));
  CHECK(parse_poset("n:3124") == n_pattern(Permutation{3, 1, 2, 4}));
  CHECK(parse_poset("dc:[12|43|65]") == dc_pop({{1, 2}, {4, 3}, {6, 5}}));
  CHECK(parse_poset("zz:^v^v:12435") == zigzag(Permutation{1, 2, 4, 3, 5}, "^v^v"));
  CHECK(parse_poset("rel:3:{(2,1),(3,1)}") == Poset::from_relations(3, {{2, 1}, {3, 1}}));
  CHECK(parse_poset("rel:2:{}") == antichain(2));
  CHECK(parse_poset("chain:(10)123456789").size() == 10);
}

TEST_CASE("canonical rendering") {
  CHECK(render_pop(parse_pop("cb:5:{4,1,4}")) == "cb:5:{1,4}");
  CHECK(render_pop(parse_pop("rel:3:{(3,1),(2,1)}")) == "rel:3:{(2,1),(3,1)}");
  CHECK(render_pop(parse_pop("chain:(10)(2)1")) == "chain:(10)21");
}

TEST_CASE("syntax errors carry offset and expectations") {
  auto offset_of = [](const char* text) {
    try {
      parse_pop(text);
    } catch (const parse_error& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("foo:12") == 0);
  CHECK(offset_of("chain:") == 6);
  CHECK(offset_of("cb:5{1}") == 4);
  CHECK(offset_of("dc:[12|43") == 9);
  CHECK(offset_of("zz:^v:123x") == 9);
  CHECK(offset_of("rel:3:{(1,2)") == 12);
  CHECK(offset_of("chain:12 ") == 8);
  try {
    parse_pop("dc:[12");
    FAIL("no throw");
  } catch (const parse_error& e) {
    CHECK(e.expected() == std::vector<std::string>{"'|'", "']'", "label"});
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
}

TEST_CASE("semantic errors come from the builders") {
  CHECK_THROWS_AS(parse_poset("n:3125"), invalid_input);
  CHECK_THROWS_AS(parse_poset("chain:112"), invalid_input);
  CHECK_THROWS_AS(parse_poset("cb:3:{1,2,3}"), invalid_input);
  CHECK_THROWS_AS(parse_poset("rel:2:{(1,2),(2,1)}"), invalid_poset);
  CHECK_THROWS_AS(parse_poset("zz:^^:123"), invalid_input);
  CHECK_THROWS_AS(parse_poset("dc:[13]"), invalid_input);
}

TEST_CASE("parse(render(ast)) round-trips") {
  std::mt19937 rng(1234);
  auto word = [&](int len) {
    Word w(static_cast<std::size_t>(len));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
  };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 500; ++trial) {
    PopSpec ast;
    switch (trial % 6) {
    case 0: ast = spec::Chain{word(pick(1, 12))}; break;
    case 1: {
      const int k = pick(2, 9);
      std::set<int> top;
      for (int i = pick(1, k - 1); i > 0; --i) top.insert(pick(1, k));
      ast = spec::CompleteBipartite{k, {top.begin(), top.end()}};
      break;
    }
    case 2: ast = spec::NPattern{word(4)}; break;
    case 3: {
      spec::DisjointChains dc;
      int offset = 0;
      for (int i = pick(1, 3); i > 0; --i) {
        Word w = word(pick(1, 4));
        for (int& x : w) x += offset;
        offset += static_cast<int>(w.size());
        dc.words.push_back(w);
      }
      ast = dc;
      break;
    }
    case 4: {
      const int k = pick(2, 7);
      std::string shape;
      const bool up = pick(0, 1);
      for (int i = 0; i + 1 < k; ++i) shape += ((i % 2 == 0) == up) ? '^' : 'v';
      ast = spec::Zigzag{shape, word(k)};
      break;
    }
    default: {
      const int k = pick(1, 11);
      std::vector<Relation> rel;
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
          if (pick(0, 3) == 0) rel.emplace_back(a, b);
      ast = spec::Relations{k, rel};
    }
    }
    const auto text = render_pop(ast);
    INFO(text);
    CHECK(parse_pop(text) == ast);
    CHECK(render_pop(parse_pop(text)) == text);
    CHECK_NOTHROW(build_pop(ast));
  }
}
