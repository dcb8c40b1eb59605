#pragma once

#include <popkit/enumerator.hpp>
#include <popkit/poset.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace popkit {

struct NamedPoset {
  std::string notation;
  Poset poset;
};

struct PatternFamily {
  std::string name;
  std::vector<NamedPoset> members;
};

struct WilfClass {
  std::vector<BigInt> prefix;
  std::vector<std::string> members;          // notation, sorted
  std::vector<std::string> representatives;  // one canonical form per symmetry orbit
};

/// Classes agree on a(0..n_max) only; equal prefixes are evidence of
/// Wilf-equivalence, not a proof.
struct WilfReport {
  std::string family;
  unsigned n_max = 0;
  std::vector<WilfClass> classes;
  bool prefix_only = true;

  static constexpr const char* caveat =
      "classes agree on a(0..n_max) only; prefix equality does not prove Wilf-equivalence";
  static constexpr const char* tie_break =
      "orbit representative = lexicographically least canonical relation form in the orbit";
};

/// Closure of {p} under label complement and order duality, deduplicated.
inline std::vector<Poset> symmetry_orbit(const Poset& p) {
  std::vector<Poset> orbit{p, label_complement(p), vertical_flip(p), label_complement(vertical_flip(p))};
  std::vector<Poset> out;
  for (auto& q : orbit)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  return out;
}

inline std::string orbit_representative(const Poset& p) {
  std::string best;
  for (const auto& q : symmetry_orbit(p)) {
    auto s = canonical_form(q);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

inline std::string n_word_notation(const Permutation& w) { return "n:" + w.to_string(); }

/// All 24 N-patterns, one per N-word.
inline PatternFamily n_pattern_family() {
  PatternFamily f{"npatterns", {}};
  for (auto it = all_permutations(4).begin(); it != all_permutations(4).end(); ++it) {
    auto w = *it;
    f.members.push_back({n_word_notation(w), n_pattern(w)});
  }
  return f;
}

/// Every complete bipartite POP of length k with |A| = a_size.
inline PatternFamily cb_family(int k, int a_size) {
  if (a_size < 1 || a_size >= k) throw invalid_input("cb family needs 1 <= |A| < k");
  PatternFamily f{"cb:" + std::to_string(k) + ":" + std::to_string(a_size), {}};
  std::vector<bool> pick(static_cast<std::size_t>(k), false);
  std::fill(pick.begin(), pick.begin() + a_size, true);
  do {
    std::set<int> top;
    std::string text = "cb:" + std::to_string(k) + ":{";
    for (int i = 0; i < k; ++i)
      if (pick[i]) {
        if (!top.empty()) text += ',';
        top.insert(i + 1);
        text += std::to_string(i + 1);
      }
    f.members.push_back({text + "}", complete_bipartite(k, top)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return f;
}

/// Groups a family by exact avoidance prefix a(0..n_max). Counting happens
/// once per symmetry orbit; orbits are counted concurrently, the report is
/// assembled in a fixed order.
inline WilfReport classify(const PatternFamily& family, unsigned n_max, const EnumerationLimits& limits = {}) {
  limits.check(n_max);
  std::map<std::string, std::vector<const NamedPoset*>> by_orbit;
  for (const auto& m : family.members) by_orbit[orbit_representative(m.poset)].push_back(&m);

  std::vector<std::pair<std::string, std::future<std::vector<BigInt>>>> jobs;
  for (const auto& [rep, members] : by_orbit) {
    const Poset* p = &members.front()->poset;
    jobs.emplace_back(rep, std::async(std::launch::async, [p, n_max, limits] {
                        return avoidance_sequence(*p, n_max, limits).values;
                      }));
  }

  std::map<std::vector<BigInt>, WilfClass> grouped;
  for (auto& [rep, fut] : jobs) {
    auto prefix = fut.get();
    auto& cls = grouped[prefix];
    cls.prefix = prefix;
    cls.representatives.push_back(rep);
    for (const auto* m : by_orbit[rep]) cls.members.push_back(m->notation);
  }

  WilfReport report;
  report.family = family.name;
  report.n_max = n_max;
  for (auto& [prefix, cls] : grouped) {
    std::sort(cls.members.begin(), cls.members.end());
    std::sort(cls.representatives.begin(), cls.representatives.end());
    report.classes.push_back(std::move(cls));
  }
  return report;
}

} // namespace popkit
