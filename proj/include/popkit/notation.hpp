#pragma once

// Textual POP notation.
//
//   pop     := kind ":" payload
//   chain:<word>           classical pattern, e.g. chain:2134
//   cb:<k>:<set>           complete bipartite (A/B), e.g. cb:5:{1,4}
//   n:<word>               N-pattern from its N-word, e.g. n:3124
//   dc:[<word>|<word>...]  disjoint chains, top to bottom, e.g. dc:[12|43|65]
//   zz:<shape>:<word>      alternating path, shape over '^'/'v', e.g. zz:^v^v:12435
//   rel:<k>:{(a,b),...}    explicit relations a below b, e.g. rel:3:{(2,1),(3,1)}
//
//   word    := label+ ;  label := digit 1-9 | "(" integer ")"
//   set     := "{" [integer ("," integer)*] "}"
//
// Sets and relation lists are kept sorted and deduplicated in the AST, so
// parse(render(ast)) == ast and render(parse(text)) is the canonical text.

#include <popkit/errors.hpp>
#include <popkit/poset.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace popkit {

namespace spec {

struct Chain {
  Word word;
  friend bool operator==(const Chain&, const Chain&) = default;
};
struct CompleteBipartite {
  int k = 0;
  std::vector<int> top;
  friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};
struct NPattern {
  Word word;
  friend bool operator==(const NPattern&, const NPattern&) = default;
};
struct DisjointChains {
  std::vector<Word> words;
  friend bool operator==(const DisjointChains&, const DisjointChains&) = default;
};
struct Zigzag {
  std::string shape;
  Word word;
  friend bool operator==(const Zigzag&, const Zigzag&) = default;
};
struct Relations {
  int k = 0;
  std::vector<Relation> relations;
  friend bool operator==(const Relations&, const Relations&) = default;
};

} // namespace spec

using PopSpec =
    std::variant<spec::Chain, spec::CompleteBipartite, spec::NPattern, spec::DisjointChains, spec::Zigzag, spec::Relations>;

namespace detail {

class NotationParser {
public:
  explicit NotationParser(std::string_view text) : s_(text) {}

  PopSpec parse() {
    const std::size_t kind_start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z') ++pos_;
    const std::string_view kind = s_.substr(kind_start, pos_ - kind_start);
    PopSpec result;
    if (kind == "chain") {
      expect(':');
      result = spec::Chain{word()};
    } else if (kind == "cb") {
      expect(':');
      spec::CompleteBipartite cb;
      cb.k = integer();
      expect(':');
      cb.top = set();
      result = std::move(cb);
    } else if (kind == "n") {
      expect(':');
      result = spec::NPattern{word()};
    } else if (kind == "dc") {
      expect(':');
      expect('[');
      spec::DisjointChains dc;
      dc.words.push_back(word());
      while (peek('|')) {
        ++pos_;
        dc.words.push_back(word());
      }
      expect(']', {"'|'", "']'", "label"});
      result = std::move(dc);
    } else if (kind == "zz") {
      expect(':');
      spec::Zigzag zz;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (s_[pos_] == '^' || s_[pos_] == 'v')) ++pos_;
      if (pos_ == start) fail({"'^'", "'v'"});
      zz.shape = std::string(s_.substr(start, pos_ - start));
      expect(':', {"'^'", "'v'", "':'"});
      zz.word = word();
      result = std::move(zz);
    } else if (kind == "rel") {
      expect(':');
      spec::Relations rel;
      rel.k = integer();
      expect(':');
      expect('{');
      if (!peek('}')) {
        rel.relations.push_back(pair());
        while (peek(',')) {
          ++pos_;
          rel.relations.push_back(pair());
        }
      }
      expect('}', {"','", "'}'"});
      std::sort(rel.relations.begin(), rel.relations.end());
      rel.relations.erase(std::unique(rel.relations.begin(), rel.relations.end()), rel.relations.end());
      result = std::move(rel);
    } else {
      pos_ = kind_start;
      fail({"'chain'", "'cb'", "'n'", "'dc'", "'zz'", "'rel'"});
    }
    if (pos_ != s_.size()) fail({"end of input"});
    return result;
  }

private:
  [[noreturn]] void fail(std::vector<std::string> expected) const { throw parse_error(pos_, std::move(expected)); }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c, std::vector<std::string> expected = {}) {
    if (!peek(c)) fail(expected.empty() ? std::vector<std::string>{std::string("'") + c + "'"} : std::move(expected));
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) {
        pos_ = start;
        fail({"integer <= 1000000"});
      }
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return static_cast<int>(v);
  }

  Word word() {
    Word w;
    for (;;) {
      if (pos_ < s_.size() && s_[pos_] >= '1' && s_[pos_] <= '9') {
        w.push_back(s_[pos_++] - '0');
      } else if (peek('(')) {
        ++pos_;
        w.push_back(integer());
        expect(')');
      } else {
        break;
      }
    }
    if (w.empty()) fail({"label"});
    return w;
  }

  std::vector<int> set() {
    expect('{');
    std::vector<int> out;
    if (!peek('}')) {
      out.push_back(integer());
      while (peek(',')) {
        ++pos_;
        out.push_back(integer());
      }
    }
    expect('}', {"','", "'}'"});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Relation pair() {
    expect('(');
    const int a = integer();
    expect(',');
    const int b = integer();
    expect(')');
    return {a, b};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string render_word(const Word& w) {
  std::string s;
  for (int x : w) s += (x >= 1 && x <= 9) ? std::to_string(x) : "(" + std::to_string(x) + ")";
  return s;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace detail

/// Parses notation text into an AST. Throws parse_error with the byte offset
/// and the accepted tokens; semantic checks happen in build_pop.
inline PopSpec parse_pop(std::string_view text) { return detail::NotationParser(text).parse(); }

inline std::string render_pop(const PopSpec& spec) {
  using detail::render_word;
  return std::visit(
      detail::overloaded{
          [](const spec::Chain& c) { return "chain:" + render_word(c.word); },
          [](const spec::CompleteBipartite& c) {
            std::string s = "cb:" + std::to_string(c.k) + ":{";
            for (std::size_t i = 0; i < c.top.size(); ++i) s += (i ? "," : "") + std::to_string(c.top[i]);
            return s + "}";
          },
          [](const spec::NPattern& c) { return "n:" + render_word(c.word); },
          [](const spec::DisjointChains& c) {
            std::string s = "dc:[";
            for (std::size_t i = 0; i < c.words.size(); ++i) s += (i ? "|" : "") + render_word(c.words[i]);
            return s + "]";
          },
          [](const spec::Zigzag& c) { return "zz:" + c.shape + ":" + render_word(c.word); },
          [](const spec::Relations& c) {
            std::string s = "rel:" + std::to_string(c.k) + ":{";
            for (std::size_t i = 0; i < c.relations.size(); ++i)
              s += (i ? ",(" : "(") + std::to_string(c.relations[i].first) + "," +
                   std::to_string(c.relations[i].second) + ")";
            return s + "}";
          },
      },
      spec);
}

/// Builds the poset an AST describes; builder errors (invalid_input,
/// invalid_poset) propagate unchanged.
inline Poset build_pop(const PopSpec& spec) {
  return std::visit(detail::overloaded{
                        [](const spec::Chain& c) { return chain(Permutation(c.word)); },
                        [](const spec::CompleteBipartite& c) {
                          return complete_bipartite(c.k, std::set<int>(c.top.begin(), c.top.end()));
                        },
                        [](const spec::NPattern& c) { return n_pattern(Permutation(c.word)); },
                        [](const spec::DisjointChains& c) { return dc_pop(c.words); },
                        [](const spec::Zigzag& c) { return zigzag(Permutation(c.word), c.shape); },
                        [](const spec::Relations& c) { return Poset::from_relations(c.k, c.relations); },
                    },
                    spec);
}

inline Poset parse_poset(std::string_view text) { return build_pop(parse_pop(text)); }

} // namespace popkit
