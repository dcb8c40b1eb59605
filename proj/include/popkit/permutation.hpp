#pragma once

#include <popkit/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace popkit {

// Largest n for which exhaustive enumeration is attempted unless overridden.
inline constexpr unsigned default_enumeration_cap = 12;

struct EnumerationLimits {
  unsigned cap = default_enumeration_cap;

  void check(unsigned n) const {
    if (n > cap)
      throw resource_limit("enumeration of length " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
};

/// A permutation of {1..n} in one-line notation. Values and positions are
/// one-indexed in the textual form; `operator[]` is zero-indexed by position.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<char> seen(entries_.size() + 1, 0);
    for (int v : entries_) {
      if (v < 1 || v > static_cast<int>(entries_.size()) || seen[v])
        throw invalid_input("not a permutation of 1.." + std::to_string(entries_.size()));
      seen[v] = 1;
    }
  }

  Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Digits for n <= 9 ("41253"), comma-separated otherwise ("11,9,10,...").
  /// Either form is accepted for any n.
  static Permutation parse(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(pos, end - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw invalid_input("malformed permutation '" + std::string(text) + "'");
        v.push_back(std::stoi(std::string(tok)));
        pos = end + 1;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw invalid_input("malformed permutation '" + std::string(text) + "'");
        v.push_back(c - '0');
      }
    }
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::string to_string() const {
    std::string s;
    const bool wide = entries_.size() > 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> entries_;
};

/// Order-isomorphic relabelling of distinct integers onto 1..|s|.
inline Permutation reduce(std::span<const int> s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  std::vector<int> out(s.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r && s[order[r]] == s[order[r - 1]])
      throw invalid_input("reduce: duplicate entry " + std::to_string(s[order[r]]));
    out[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation(std::move(out));
}

inline Permutation reduce(std::initializer_list<int> s) {
  return reduce(std::span<const int>(s.begin(), s.size()));
}

inline Permutation complement(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  const int n1 = static_cast<int>(v.size()) + 1;
  for (int& x : v) x = n1 - x;
  return Permutation(std::move(v));
}

inline Permutation reverse(const Permutation& p) {
  return Permutation(std::vector<int>(p.entries().rbegin(), p.entries().rend()));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[p[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

/// All n! permutations of length n in lexicographic order, generated lazily.
class PermutationRange {
public:
  class iterator {
  public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(std::size_t n) : current_(n), done_(false) {
      std::iota(current_.begin(), current_.end(), 1);
    }

    Permutation operator*() const { return Permutation(current_); }
    std::span<const int> view() const noexcept { return current_; }

    iterator& operator++() {
      done_ = !std::next_permutation(current_.begin(), current_.end());
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

  private:
    std::vector<int> current_;
    bool done_ = true;
  };

  PermutationRange(unsigned n, const EnumerationLimits& limits) : n_(n) { limits.check(n); }

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

private:
  unsigned n_;
};

inline PermutationRange all_permutations(unsigned n, const EnumerationLimits& limits = {}) {
  return PermutationRange(n, limits);
}

} // namespace popkit
