#pragma once

#include <popkit/bigint.hpp>
#include <popkit/errors.hpp>
#include <popkit/permutation.hpp>
#include <popkit/poset.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace popkit {

/// Occurrence search for one POP, compiled once and reused across many texts.
///
/// Works on any sequence of distinct integers: containment depends only on
/// relative order, so a prefix never needs to be reduced before matching.
/// Labels are placed left to right on increasing positions; a partial
/// assignment is abandoned as soon as one placed pair violates a relation.
class Matcher {
public:
  explicit Matcher(const Poset& p) : k_(p.size()), smaller_(k_, 0), larger_(k_, 0), last_rel_(k_, 0) {
    for (int j = 0; j < k_; ++j)
      for (int m = 0; m < j; ++m) {
        if (p.less(m + 1, j + 1)) smaller_[j] |= std::uint64_t{1} << m;
        if (p.less(j + 1, m + 1)) larger_[j] |= std::uint64_t{1} << m;
      }
    if (k_ > 0)
      for (int j = 0; j + 1 < k_; ++j)
        last_rel_[j] = p.less(j + 1, k_) ? -1 : p.less(k_, j + 1) ? 1 : 0;
  }

  int size() const noexcept { return k_; }

  bool contains(std::span<const int> text) const {
    if (static_cast<int>(text.size()) < k_) return false;
    State s{text, {}, false, 0};
    return search(s, 0, 0, static_cast<int>(text.size()), /*stop_at_first=*/true);
  }

  std::uint64_t count(std::span<const int> text) const {
    if (static_cast<int>(text.size()) < k_) return 0;
    State s{text, {}, false, 0};
    std::uint64_t total = 0;
    search(s, 0, 0, static_cast<int>(text.size()), false, &total);
    return total;
  }

  /// True iff some occurrence places the last pattern label on the last entry
  /// of `text`. When text minus its last entry avoids the pattern, this is
  /// equivalent to contains(text).
  bool contains_ending_at_last(std::span<const int> text) const {
    const int n = static_cast<int>(text.size());
    if (n < k_ || k_ == 0) return k_ == 0;
    State s{text, {}, true, text[n - 1]};
    s.chosen[k_ - 1] = n - 1;
    return search(s, 0, 0, n - 1, true);
  }

private:
  struct State {
    std::span<const int> text;
    std::array<int, Poset::max_size> chosen;
    bool anchored;
    int last_value;
  };

  bool fits(const State& s, int label, int v) const {
    for (std::uint64_t m = smaller_[label]; m; m &= m - 1)
      if (s.text[s.chosen[std::countr_zero(m)]] >= v) return false;
    for (std::uint64_t m = larger_[label]; m; m &= m - 1)
      if (s.text[s.chosen[std::countr_zero(m)]] <= v) return false;
    if (s.anchored) {
      if (last_rel_[label] < 0 && v >= s.last_value) return false;
      if (last_rel_[label] > 0 && v <= s.last_value) return false;
    }
    return true;
  }

  // Places `label` at some position in [from, limit); returns true on the first
  // complete occurrence when stop_at_first, otherwise accumulates into *total.
  bool search(State& s, int label, int from, int limit, bool stop_at_first,
              std::uint64_t* total = nullptr) const {
    const int last_label = s.anchored ? k_ - 1 : k_;
    if (label == last_label) {
      if (total) ++*total;
      return true;
    }
    const int remaining = last_label - label;
    for (int pos = from; pos + remaining <= limit; ++pos) {
      const int v = s.text[pos];
      if (!fits(s, label, v)) continue;
      s.chosen[label] = pos;
      if (search(s, label + 1, pos + 1, limit, stop_at_first, total) && stop_at_first) return true;
    }
    return false;
  }

  int k_;
  std::vector<std::uint64_t> smaller_;
  std::vector<std::uint64_t> larger_;
  std::vector<int> last_rel_;
};

inline bool contains(const Permutation& pi, const Poset& p) { return Matcher(p).contains(pi.entries()); }

inline bool avoids(const Permutation& pi, const Poset& p) { return !contains(pi, p); }

inline BigInt count_occurrences(const Permutation& pi, const Poset& p) {
  return BigInt(Matcher(p).count(pi.entries()));
}

/// Contains p while red(pi_1 ... pi_{n-1}) avoids it.
inline bool quasi_avoids(const Permutation& pi, const Poset& p) {
  if (pi.empty()) throw invalid_input("quasi-avoidance is undefined for the empty permutation");
  const Matcher m(p);
  return m.contains(pi.entries()) && !m.contains(pi.entries().first(pi.size() - 1));
}

} // namespace popkit
