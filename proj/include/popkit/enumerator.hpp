#pragma once

#include <popkit/bigint.hpp>
#include <popkit/matcher.hpp>
#include <popkit/permutation.hpp>
#include <popkit/poset.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace popkit {

enum class SequenceSource { brute_force, theorem, gf_expansion, egf_expansion };

inline const char* to_string(SequenceSource s) {
  switch (s) {
  case SequenceSource::brute_force: return "brute-force";
  case SequenceSource::theorem: return "theorem";
  case SequenceSource::gf_expansion: return "gf-expansion";
  case SequenceSource::egf_expansion: return "egf-expansion";
  }
  return "unknown";
}

/// Exact counting sequence a(0..N) tagged with what produced it.
struct CountSequence {
  std::string pattern;  // notation text or theorem id
  SequenceSource source = SequenceSource::brute_force;
  std::vector<BigInt> values;

  std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }
};

namespace detail {

struct ExtensionTally {
  std::uint64_t avoiders = 0;
  std::uint64_t quasi = 0;
};

// Depth-first over prefixes of n-permutations, one entry at a time. A prefix
// that contains p is never extended: containment is hereditary, so the
// occurrence survives in every extension. Since the parent prefix avoids p, a
// new occurrence must use the entry just placed.
class PrefixSearch {
public:
  PrefixSearch(const Matcher& m, unsigned n) : matcher_(m), n_(n), prefix_() { prefix_.reserve(n); }

  ExtensionTally run_from(int first_value) {
    ExtensionTally t;
    used_ = std::uint64_t{1} << first_value;
    prefix_.assign(1, first_value);
    step(t);
    return t;
  }

private:
  void step(ExtensionTally& t) {
    if (matcher_.contains_ending_at_last(prefix_)) {
      if (prefix_.size() == n_) ++t.quasi;
      return;
    }
    if (prefix_.size() == n_) {
      ++t.avoiders;
      return;
    }
    for (unsigned v = 1; v <= n_; ++v) {
      const std::uint64_t b = std::uint64_t{1} << v;
      if (used_ & b) continue;
      used_ |= b;
      prefix_.push_back(static_cast<int>(v));
      step(t);
      prefix_.pop_back();
      used_ &= ~b;
    }
  }

  const Matcher& matcher_;
  unsigned n_;
  std::vector<int> prefix_;
  std::uint64_t used_ = 0;
};

// Work is split by the first entry; per-thread tallies are summed in index
// order so totals do not depend on scheduling.
inline ExtensionTally tally(const Poset& p, unsigned n, const EnumerationLimits& limits) {
  limits.check(n);
  if (n == 0) return {p.size() == 0 ? 0u : 1u, 0};
  if (p.size() == 0) return {0, 0};
  const Matcher matcher(p);
  std::vector<ExtensionTally> parts(n);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    PrefixSearch search(matcher, n);
    for (unsigned i = next++; i < n; i = next++) parts[i] = search.run_from(static_cast<int>(i + 1));
  };
  const unsigned threads = std::max(1u, std::min(n, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  ExtensionTally total;
  for (const auto& part : parts) {
    total.avoiders += part.avoiders;
    total.quasi += part.quasi;
  }
  return total;
}

} // namespace detail

/// |S_n(p)|, the number of n-permutations avoiding p.
inline BigInt count_avoiders(const Poset& p, unsigned n, const EnumerationLimits& limits = {}) {
  return detail::tally(p, n, limits).avoiders;
}

/// Number of n-permutations that contain p while their length-(n-1) prefix avoids it.
inline BigInt count_quasi_avoiders(const Poset& p, unsigned n, const EnumerationLimits& limits = {}) {
  if (n == 0) throw invalid_input("quasi-avoidance is undefined for n = 0");
  return detail::tally(p, n, limits).quasi;
}

inline CountSequence avoidance_sequence(const Poset& p, unsigned n_max, const EnumerationLimits& limits = {},
                                        std::string name = {}) {
  limits.check(n_max);
  CountSequence seq{name.empty() ? canonical_form(p) : std::move(name), SequenceSource::brute_force, {}};
  for (unsigned n = 0; n <= n_max; ++n) seq.values.push_back(count_avoiders(p, n, limits));
  return seq;
}

} // namespace popkit
