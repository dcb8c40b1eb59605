#pragma once

#include <popkit/errors.hpp>
#include <popkit/permutation.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace popkit {

// Labels are one-indexed in every public signature.
using Relation = std::pair<int, int>;
using Word = std::vector<int>;

/// A strict partial order on pattern positions {1..k}. `less(j, m)` means the
/// entry matched to position j must be smaller than the entry matched to m.
/// Always stored transitively closed.
class Poset {
public:
  static constexpr int max_size = 64;

  Poset() = default;

  /// Antichain on k labels.
  explicit Poset(int k) : k_(k), up_(static_cast<std::size_t>(k), 0) {
    if (k < 0 || k > max_size)
      throw invalid_input("poset size " + std::to_string(k) + " outside [0," +
                          std::to_string(max_size) + "]");
  }

  static Poset from_relations(int k, std::span<const Relation> relations) {
    Poset p(k);
    for (auto [a, b] : relations) {
      if (a < 1 || a > k || b < 1 || b > k)
        throw invalid_input("label out of range 1.." + std::to_string(k) + " in relation (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
      p.up_[a - 1] |= bit(b - 1);
    }
    p.close();
    for (int j = 0; j < k; ++j)
      if (p.up_[j] & bit(j))
        throw invalid_poset("relations contain a cycle through label " + std::to_string(j + 1));
    return p;
  }

  static Poset from_relations(int k, std::initializer_list<Relation> relations) {
    return from_relations(k, std::span<const Relation>(relations.begin(), relations.size()));
  }

  int size() const noexcept { return k_; }

  bool less(int j, int m) const { return (up_[j - 1] >> (m - 1)) & 1u; }

  /// Bitmask (bit i = label i+1) of labels forced above / below label j.
  std::uint64_t above_mask(int j) const { return up_[j - 1]; }
  std::uint64_t below_mask(int j) const {
    std::uint64_t m = 0;
    for (int i = 0; i < k_; ++i)
      if (up_[i] & bit(j - 1)) m |= bit(i);
    return m;
  }

  /// Every related pair (j, m) with j below m, sorted.
  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    for (int j = 1; j <= k_; ++j)
      for (int m = 1; m <= k_; ++m)
        if (less(j, m)) out.emplace_back(j, m);
    return out;
  }

  /// Hasse-diagram edges: related pairs with nothing strictly between, sorted.
  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (int j = 1; j <= k_; ++j)
      for (int m = 1; m <= k_; ++m)
        if (less(j, m) && (up_[j - 1] & below_mask(m)) == 0) out.emplace_back(j, m);
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  void close() {
    // Warshall over bit rows.
    for (int m = 0; m < k_; ++m)
      for (int j = 0; j < k_; ++j)
        if (up_[j] & bit(m)) up_[j] |= up_[m];
  }

  int k_ = 0;
  std::vector<std::uint64_t> up_;
};

/// Relation-list text used to identify a poset independent of how it was built:
/// `rel:k:{(a,b),...}` over Hasse covers in ascending order.
inline std::string canonical_form(const Poset& p) {
  std::string s = "rel:" + std::to_string(p.size()) + ":{";
  bool first = true;
  for (auto [a, b] : p.covers()) {
    if (!first) s += ',';
    first = false;
    s += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
  }
  return s + '}';
}

inline Poset antichain(int k) { return Poset(k); }

/// Total order: position i below position j iff word[i] < word[j]. Occurrences
/// coincide with classical occurrences of `word`.
inline Poset chain(const Permutation& word) {
  std::vector<Relation> rel;
  const int k = static_cast<int>(word.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (word[i] < word[j]) rel.emplace_back(i + 1, j + 1);
  return Poset::from_relations(k, rel);
}

/// (A/B): every position in A carries a larger entry than every position outside A.
inline Poset complete_bipartite(int k, const std::set<int>& top) {
  if (top.empty() || static_cast<int>(top.size()) >= k)
    throw invalid_input("complete bipartite: A must be a nonempty proper subset of 1.." +
                        std::to_string(k));
  std::vector<Relation> rel;
  for (int a : top) {
    if (a < 1 || a > k) throw invalid_input("complete bipartite: label " + std::to_string(a) + " out of range");
    for (int b = 1; b <= k; ++b)
      if (!top.contains(b)) rel.emplace_back(b, a);
  }
  return Poset::from_relations(k, rel);
}

/// Poset whose Hasse diagram is a path with labels `word` read along it;
/// shape[i] is '^' when the path climbs from word[i] to word[i+1], 'v' when it descends.
inline Poset zigzag(const Permutation& word, std::string_view shape) {
  if (shape.size() + 1 != word.size())
    throw invalid_input("zigzag: shape length must be one less than the word length");
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const char c = shape[i];
    if (c != '^' && c != 'v') throw invalid_input("zigzag: shape characters must be '^' or 'v'");
    if (i && shape[i - 1] == c) throw invalid_input("zigzag: shape must alternate");
    if (c == '^')
      rel.emplace_back(word[i], word[i + 1]);
    else
      rel.emplace_back(word[i + 1], word[i]);
  }
  return Poset::from_relations(static_cast<int>(word.size()), rel);
}

/// N-shaped poset from an N-word read lower-left, upper-left, lower-right, upper-right.
inline Poset n_pattern(const Permutation& word) {
  if (word.size() != 4) throw invalid_input("N-word must have length 4");
  return zigzag(word, "^v^");
}

/// Disjoint union of chains. Chain i uses the next block of consecutive labels;
/// each word lists its block's labels from the top of the chain to the bottom.
/// A word may also be written in reduced form (e.g. [123,21] for [123,54]).
inline Poset dc_pop(const std::vector<Word>& words) {
  if (words.empty()) throw invalid_input("dc pop needs at least one chain");
  std::vector<Relation> rel;
  int offset = 0;
  for (const auto& w : words) {
    if (w.empty()) throw invalid_input("dc pop: empty chain");
    const int len = static_cast<int>(w.size());
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    auto is_range = [&](int from) {
      for (int i = 0; i < len; ++i)
        if (sorted[i] != from + i) return false;
      return true;
    };
    int shift = 0;
    if (!is_range(offset + 1)) {
      if (!is_range(1))
        throw invalid_input("dc pop: chain labels must be exactly " + std::to_string(offset + 1) + ".." +
                            std::to_string(offset + len));
      shift = offset;
    }
    for (int i = 0; i + 1 < len; ++i) rel.emplace_back(w[i + 1] + shift, w[i] + shift);
    offset += len;
  }
  return Poset::from_relations(offset, rel);
}

/// Relabel x -> k+1-x.
inline Poset label_complement(const Poset& p) {
  const int k = p.size();
  std::vector<Relation> rel;
  for (auto [a, b] : p.relations()) rel.emplace_back(k + 1 - a, k + 1 - b);
  return Poset::from_relations(k, rel);
}

/// Order dual: every relation reversed.
inline Poset vertical_flip(const Poset& p) {
  std::vector<Relation> rel;
  for (auto [a, b] : p.relations()) rel.emplace_back(b, a);
  return Poset::from_relations(p.size(), rel);
}

/// True iff no label lies strictly between two others (longest Hasse chain has one edge).
inline bool is_bipartite(const Poset& p) {
  for (int j = 1; j <= p.size(); ++j)
    if (p.above_mask(j) != 0 && p.below_mask(j) != 0) return false;
  return true;
}

} // namespace popkit
