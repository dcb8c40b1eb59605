#pragma once

#include <popkit/bigint.hpp>
#include <popkit/enumerator.hpp>
#include <popkit/errors.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace popkit {

/// Ordinary generating function numerator / denominator with integer
/// coefficients, lowest degree first.
struct RationalGf {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;
};

/// Power-series coefficients of `gf` up to x^n_max, by the linear recurrence
/// the denominator imposes.
inline CountSequence gf_coefficients(const RationalGf& gf, unsigned n_max, std::string name = "gf") {
  if (gf.denominator.empty() || gf.denominator.front() == 0)
    throw invalid_gf("denominator must have a nonzero constant term");
  const BigInt& d0 = gf.denominator.front();
  CountSequence seq{std::move(name), SequenceSource::gf_expansion, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    BigInt c = n < gf.numerator.size() ? gf.numerator[n] : BigInt(0);
    for (std::size_t i = 1; i < gf.denominator.size() && i <= n; ++i) c -= gf.denominator[i] * seq.values[n - i];
    if (c % d0 != 0) throw invalid_gf("coefficient of x^" + std::to_string(n) + " is not an integer");
    seq.values.push_back(c / d0);
  }
  return seq;
}

// Named theorem generators. Initial values are a(n) = n! below the pattern
// length; none of them consult the enumerator.

enum class TheoremId {
  b1,
  b2,
  cb_adjacent,
  cb_interval,
  cb_gap2,
  cb_14_235,
  n_class1,
  n_class2,
  n_class3,
  dc_p1,
  dc_p2_fibonacci,
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  bool needs_k;
  bool needs_j;
  std::string_view summary;
};

inline constexpr std::array<TheoremInfo, 11> theorem_table{{
    {TheoremId::b1, "b1", true, false, "one label above all others: (k-1)!(k-1)^(n-k+1)"},
    {TheoremId::b2, "b2", true, false, "A={1,k}: a(n)=2(k-2)a(n-1)-(k-2)(k-3)a(n-2)"},
    {TheoremId::cb_adjacent, "cb-adjacent", true, false, "A={i,i+1}: same recurrence as b2"},
    {TheoremId::cb_interval, "cb-interval", true, true, "A=[i,i+j]: inclusion-exclusion recurrence"},
    {TheoremId::cb_gap2, "cb-gap2", true, false, "A={i,i+2}: same recurrence as b2"},
    {TheoremId::cb_14_235, "cb-14-235", false, false, "A={1,4}, k=5: coupled a/b system"},
    {TheoremId::n_class1, "n-class1", false, false, "a(n)=4a(n-1)-3a(n-2)+1"},
    {TheoremId::n_class2, "n-class2", false, false, "a(n)=4a(n-1)-3a(n-2)+a(n-3)"},
    {TheoremId::n_class3, "n-class3", false, false, "a(n)=3a(n-1)+a(n-2)-a(n-3)"},
    {TheoremId::dc_p1, "dc-p1", false, false, "chain 1<2 plus isolated 3: a(n)=n"},
    {TheoremId::dc_p2_fibonacci, "dc-p2-fibonacci", false, false, "chain 1<3 plus isolated 2: Fibonacci"},
}};

inline const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& t : theorem_table)
    if (t.id == id) return t;
  throw std::logic_error("unknown theorem id");
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& t : theorem_table)
    if (t.name == name) return t.id;
  return std::nullopt;
}

namespace detail {

inline CountSequence theorem_seq(std::string name) {
  return CountSequence{std::move(name), SequenceSource::theorem, {}};
}

} // namespace detail

inline CountSequence thm_b1(int k, unsigned n_max) {
  if (k < 1) throw invalid_input("b1 needs k >= 1");
  auto seq = detail::theorem_seq("b1:k=" + std::to_string(k));
  const BigInt base = factorial(static_cast<unsigned>(k - 1));
  for (unsigned n = 0; n <= n_max; ++n) {
    if (static_cast<int>(n) < k)
      seq.values.push_back(factorial(n));
    else
      seq.values.push_back(base * boost::multiprecision::pow(BigInt(k - 1), n - static_cast<unsigned>(k) + 1));
  }
  return seq;
}

/// Inclusion-exclusion recurrence for A = [i, i+j]:
///   a(n) = sum_{l=1}^{j+1} (-1)^(l-1) C(j+1,l) (k-j-1)(k-j-2)...(k-j-l) a(n-l).
inline CountSequence thm_general1(int k, int j, unsigned n_max) {
  if (j < 0 || k < j + 2) throw invalid_input("cb-interval needs j >= 0 and k >= j+2");
  auto seq = detail::theorem_seq("cb-interval:k=" + std::to_string(k) + ",j=" + std::to_string(j));
  std::vector<BigInt> coeff(static_cast<std::size_t>(j) + 2);
  for (int l = 1; l <= j + 1; ++l) {
    BigInt c = binomial(j + 1, l) * falling_factorial(k - j - 1, l);
    coeff[l] = (l % 2 == 1) ? c : BigInt(-c);
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    if (static_cast<int>(n) < k) {
      seq.values.push_back(factorial(n));
      continue;
    }
    BigInt a = 0;
    for (int l = 1; l <= j + 1; ++l) a += coeff[l] * seq.values[n - l];
    seq.values.push_back(a);
  }
  return seq;
}

inline CountSequence thm_b2_recurrence(int k, unsigned n_max) {
  if (k < 2) throw invalid_input("b2 needs k >= 2");
  auto seq = detail::theorem_seq("b2:k=" + std::to_string(k));
  const BigInt c1 = 2 * (k - 2);
  const BigInt c2 = BigInt(k - 2) * (k - 3);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (static_cast<int>(n) < k)
      seq.values.push_back(factorial(n));
    else
      seq.values.push_back(c1 * seq.values[n - 1] - c2 * seq.values[n - 2]);
  }
  return seq;
}

/// The exceptional length-5 pattern ({1,4}/{2,3,5}):
///   a(n) = 7a(n-1) - 12a(n-2) + 4a(n-3) + 2b(n-2) for n >= 5,
///   b(1)=0, b(2)=1, b(n) = a(n-2) + b(n-1) + 2 sum_{i=2}^{n-2} b(i).
inline CountSequence thm_long_answer(unsigned n_max) {
  auto seq = detail::theorem_seq("cb-14-235");
  std::vector<BigInt>& a = seq.values;
  std::vector<BigInt> b{0, 0, 1};  // b(0) unused
  auto b_at = [&](unsigned n) -> const BigInt& {
    while (b.size() <= n) {
      const std::size_t m = b.size();
      BigInt sum = 0;
      for (std::size_t i = 2; i + 2 <= m; ++i) sum += b[i];
      b.push_back(a[m - 2] + b[m - 1] + 2 * sum);
    }
    return b[n];
  };
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n <= 4)
      a.push_back(factorial(n));
    else
      a.push_back(7 * a[n - 1] - 12 * a[n - 2] + 4 * a[n - 3] + 2 * b_at(n - 2));
  }
  return seq;
}

inline BigInt n_class1_closed_form(unsigned n) {
  return (boost::multiprecision::pow(BigInt(3), n) - 2 * BigInt(n) + 3) / 4;
}

/// sum_{i=0}^{n-1} C(n+2i-1, 3i), valid for n >= 1.
inline BigInt n_class2_binomial_sum(unsigned n) {
  BigInt s = 0;
  for (long long i = 0; i < static_cast<long long>(n); ++i) s += binomial(n + 2 * i - 1, 3 * i);
  return s;
}

inline CountSequence n_class1(unsigned n_max) {
  auto seq = detail::theorem_seq("n-class1");
  auto& a = seq.values;
  for (unsigned n = 0; n <= n_max; ++n) {
    a.push_back(n < 2 ? BigInt(1) : 4 * a[n - 1] - 3 * a[n - 2] + 1);
    if (a.back() != n_class1_closed_form(n)) throw std::logic_error("n-class1 closed form disagrees at n=" + std::to_string(n));
  }
  return seq;
}

// a(2) = 2 is an initial value: the recurrence needs three predecessors.
inline CountSequence n_class2(unsigned n_max) {
  auto seq = detail::theorem_seq("n-class2");
  auto& a = seq.values;
  for (unsigned n = 0; n <= n_max; ++n) {
    a.push_back(n < 3 ? factorial(n) : 4 * a[n - 1] - 3 * a[n - 2] + a[n - 3]);
    if (n >= 1 && a.back() != n_class2_binomial_sum(n))
      throw std::logic_error("n-class2 binomial sum disagrees at n=" + std::to_string(n));
  }
  return seq;
}

inline CountSequence n_class3(unsigned n_max) {
  auto seq = detail::theorem_seq("n-class3");
  auto& a = seq.values;
  for (unsigned n = 0; n <= n_max; ++n) a.push_back(n <= 3 ? factorial(n) : 3 * a[n - 1] + a[n - 2] - a[n - 3]);
  return seq;
}

enum class SmallDc { p1, p2 };

/// p1 = chain 1<2 with 3 isolated (a(n) = n); p2 = chain 1<3 with 2 isolated
/// (Fibonacci with a(0) = a(1) = 1, i.e. a(n) = F_{n+1}).
inline CountSequence dc_small(SmallDc which, unsigned n_max) {
  auto seq = detail::theorem_seq(which == SmallDc::p1 ? "dc-p1" : "dc-p2-fibonacci");
  auto& a = seq.values;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (which == SmallDc::p1)
      a.push_back(n == 0 ? BigInt(1) : BigInt(n));
    else
      a.push_back(n < 2 ? BigInt(1) : a[n - 1] + a[n - 2]);
  }
  return seq;
}

inline Poset dc_small_pattern(SmallDc which) {
  return which == SmallDc::p1 ? Poset::from_relations(3, {{1, 2}}) : Poset::from_relations(3, {{1, 3}});
}

struct TheoremParams {
  std::optional<int> k;
  std::optional<int> j;
};

inline CountSequence theorem_sequence(TheoremId id, const TheoremParams& params, unsigned n_max) {
  const auto& info = theorem_info(id);
  if (info.needs_k && !params.k) throw invalid_input(std::string(info.name) + " needs --k");
  if (info.needs_j && !params.j) throw invalid_input(std::string(info.name) + " needs --j");
  CountSequence seq;
  switch (id) {
  case TheoremId::b1: seq = thm_b1(*params.k, n_max); break;
  case TheoremId::b2: seq = thm_b2_recurrence(*params.k, n_max); break;
  case TheoremId::cb_adjacent:
  case TheoremId::cb_gap2:
    if (*params.k < 3) throw invalid_input(std::string(info.name) + " needs k >= 3");
    seq = thm_b2_recurrence(*params.k, n_max);
    break;
  case TheoremId::cb_interval: seq = thm_general1(*params.k, *params.j, n_max); break;
  case TheoremId::cb_14_235: seq = thm_long_answer(n_max); break;
  case TheoremId::n_class1: seq = n_class1(n_max); break;
  case TheoremId::n_class2: seq = n_class2(n_max); break;
  case TheoremId::n_class3: seq = n_class3(n_max); break;
  case TheoremId::dc_p1: seq = dc_small(SmallDc::p1, n_max); break;
  case TheoremId::dc_p2_fibonacci: seq = dc_small(SmallDc::p2, n_max); break;
  }
  seq.pattern = std::string(info.name) + (params.k && info.needs_k ? ":k=" + std::to_string(*params.k) : "") +
                (params.j && info.needs_j ? ",j=" + std::to_string(*params.j) : "");
  return seq;
}

// Stated ordinary generating functions.

/// (k-1)(k-1)! x^k / (1-(k-1)x) + sum_{i<k} i! x^i, over the common denominator.
inline RationalGf gf_b1(int k) {
  if (k < 1) throw invalid_input("b1 needs k >= 1");
  RationalGf gf;
  gf.denominator = {1, -(k - 1)};
  gf.numerator.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; ++i) {
    gf.numerator[i] += factorial(i);
    gf.numerator[i + 1] -= (k - 1) * factorial(i);
  }
  gf.numerator[k] += BigInt(k - 1) * factorial(k - 1);
  return gf;
}

/// (A - B + C) / (1 - 2(k-2)x + (k-2)(k-3)x^2) with
/// A = sum_{i<=k-3} i! x^i, B = 2(k-2) sum_{i<=k-4} i! x^{i+1}, C = (k-2)(k-3) sum_{i<=k-5} i! x^{i+2}.
/// The numerator only reproduces a(0..k-1) = 0!..(k-1)! once k >= 4.
inline RationalGf gf_b2(int k) {
  if (k < 4) throw invalid_input("b2 generating function needs k >= 4");
  RationalGf gf;
  const BigInt c1 = 2 * (k - 2);
  const BigInt c2 = BigInt(k - 2) * (k - 3);
  gf.denominator = {1, -c1, c2};
  gf.numerator.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i <= k - 3; ++i) gf.numerator[i] += factorial(i);
  for (int i = 0; i <= k - 4; ++i) gf.numerator[i + 1] -= c1 * factorial(i);
  for (int i = 0; i <= k - 5; ++i) gf.numerator[i + 2] += c2 * factorial(i);
  return gf;
}

/// (1-3x)/(1-4x+2x^2): the length-4, |A|=2 sequence.
inline RationalGf gf_cb4_pairs() { return {{1, -3}, {1, -4, 2}}; }

/// (1-2x)^2 / ((1-3x)(1-x)^2)
inline RationalGf gf_n_class1() { return {{1, -4, 4}, {1, -5, 7, -3}}; }

/// (1-3x+x^2) / (1-4x+3x^2-x^3)
inline RationalGf gf_n_class2() { return {{1, -3, 1}, {1, -4, 3, -1}}; }

} // namespace popkit
