#pragma once

#include <popkit/bigint.hpp>
#include <popkit/enumerator.hpp>
#include <popkit/errors.hpp>
#include <popkit/poset.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace popkit {

inline constexpr unsigned default_egf_order = 15;

/// Exponential generating function sum c(n) x^n / n! truncated after x^order.
/// Stores the integer counts c(n), so products are binomial convolutions and
/// stay exact.
class TruncatedEgf {
public:
  explicit TruncatedEgf(std::vector<BigInt> counts) : c_(std::move(counts)) {
    if (c_.empty()) throw invalid_input("truncated e.g.f. needs at least one coefficient");
  }

  static TruncatedEgf constant(unsigned order, const BigInt& value) {
    std::vector<BigInt> c(order + 1, 0);
    c[0] = value;
    return TruncatedEgf(std::move(c));
  }
  static TruncatedEgf zero(unsigned order) { return constant(order, 0); }
  static TruncatedEgf one(unsigned order) { return constant(order, 1); }

  /// e^x: every count is 1.
  static TruncatedEgf exp(unsigned order) { return TruncatedEgf(std::vector<BigInt>(order + 1, 1)); }

  /// x itself: c(1) = 1.
  static TruncatedEgf x(unsigned order) {
    std::vector<BigInt> c(order + 1, 0);
    if (order >= 1) c[1] = 1;
    return TruncatedEgf(std::move(c));
  }

  unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
  const BigInt& operator[](std::size_t n) const { return c_[n]; }
  const std::vector<BigInt>& counts() const noexcept { return c_; }

  bool nonnegative() const {
    for (const auto& v : c_)
      if (v < 0) return false;
    return true;
  }

  friend TruncatedEgf operator+(const TruncatedEgf& f, const TruncatedEgf& g) {
    check_order(f, g);
    std::vector<BigInt> c(f.c_);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] += g.c_[n];
    return TruncatedEgf(std::move(c));
  }

  friend TruncatedEgf operator-(const TruncatedEgf& f, const TruncatedEgf& g) {
    check_order(f, g);
    std::vector<BigInt> c(f.c_);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] -= g.c_[n];
    return TruncatedEgf(std::move(c));
  }

  /// (f g)(n) = sum_i C(n,i) f(i) g(n-i)
  friend TruncatedEgf operator*(const TruncatedEgf& f, const TruncatedEgf& g) {
    check_order(f, g);
    const std::size_t len = f.c_.size();
    std::vector<BigInt> c(len, 0);
    std::vector<BigInt> row{1};  // Pascal row n
    for (std::size_t n = 0; n < len; ++n) {
      if (n) {
        std::vector<BigInt> next(n + 1, 1);
        for (std::size_t i = 1; i < n; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
      }
      for (std::size_t i = 0; i <= n; ++i) c[n] += row[i] * f.c_[i] * g.c_[n - i];
    }
    return TruncatedEgf(std::move(c));
  }

  friend bool operator==(const TruncatedEgf&, const TruncatedEgf&) = default;

private:
  static void check_order(const TruncatedEgf& f, const TruncatedEgf& g) {
    if (f.c_.size() != g.c_.size())
      throw invalid_input("e.g.f. order mismatch: " + std::to_string(f.order()) + " vs " +
                          std::to_string(g.order()));
  }

  std::vector<BigInt> c_;
};

inline TruncatedEgf egf_add(const TruncatedEgf& f, const TruncatedEgf& g) { return f + g; }
inline TruncatedEgf egf_mul(const TruncatedEgf& f, const TruncatedEgf& g) { return f * g; }

/// Multiply by 1/(1-x). On ordinary coefficients this is a partial sum; on
/// counts it reads c(n) = sum_{i<=n} f(i) n!/i!, which stays integral.
inline TruncatedEgf divide_by_one_minus_x(const TruncatedEgf& f) {
  std::vector<BigInt> c(f.order() + 1, 0);
  BigInt acc = 0;  // n! * sum_{i<=n} f(i)/i!
  for (unsigned n = 0; n <= f.order(); ++n) {
    acc = acc * n + f[n];
    c[n] = acc;
  }
  return TruncatedEgf(std::move(c));
}

/// E.g.f. of quasi-avoiders from that of avoiders: (x-1)A(x) + 1,
/// i.e. a*(n) = n a(n-1) - a(n) and a*(0) = 0.
inline TruncatedEgf quasi_transform(const TruncatedEgf& a) {
  if (a[0] != 1) throw invalid_input("quasi transform needs a(0) = 1");
  const unsigned N = a.order();
  return (TruncatedEgf::x(N) - TruncatedEgf::one(N)) * a + TruncatedEgf::one(N);
}

/// Avoiders of a pattern extended by one disjoint chain: C = A + B * A*, where
/// A counts avoiders of the new chain and B those of the original pattern.
inline TruncatedEgf chain_compose(const TruncatedEgf& a, const TruncatedEgf& b) {
  if (a.order() != b.order()) throw invalid_input("chain_compose: order mismatch");
  return a + b * quasi_transform(a);
}

/// A(x) = sum_i A_i(x) prod_{j<i} ((x-1)A_j(x) + 1) for chains listed in label order.
inline TruncatedEgf dc_pop_egf(const std::vector<TruncatedEgf>& chains) {
  if (chains.empty()) throw invalid_input("dc_pop_egf needs at least one chain");
  const unsigned N = chains.front().order();
  TruncatedEgf sum = TruncatedEgf::zero(N);
  TruncatedEgf prefix = TruncatedEgf::one(N);
  for (const auto& a : chains) {
    if (a.order() != N) throw invalid_input("dc_pop_egf: order mismatch");
    sum = sum + a * prefix;
    prefix = prefix * quasi_transform(a);
  }
  if (!sum.nonnegative()) throw std::logic_error("dc_pop_egf produced a negative count");
  return sum;
}

/// (1 - (1 + (x-1)e^x)^m) / (1 - x): m disjoint 2-chains.
inline TruncatedEgf bipartite_dc_closed_form(unsigned m, unsigned order = default_egf_order) {
  if (m < 1) throw invalid_input("bipartite_dc_closed_form needs m >= 1");
  const TruncatedEgf star = quasi_transform(TruncatedEgf::exp(order));
  TruncatedEgf power = TruncatedEgf::one(order);
  for (unsigned i = 0; i < m; ++i) power = power * star;
  auto result = divide_by_one_minus_x(TruncatedEgf::one(order) - power);
  if (!result.nonnegative()) throw std::logic_error("closed form produced a negative count");
  return result;
}

/// E.g.f. of avoiders of a single chain whose word has `length` labels.
/// Lengths 1-3 have closed counts (0 beyond n=0, 1, Catalan); longer chains are
/// enumerated, so `order` must be within the enumeration cap.
inline TruncatedEgf chain_avoidance_egf(const Word& word, unsigned order, const EnumerationLimits& limits = {}) {
  const std::size_t len = word.size();
  std::vector<BigInt> c(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    switch (len) {
    case 1: c[n] = n == 0 ? 1 : 0; break;
    case 2: c[n] = 1; break;
    case 3: c[n] = binomial(2 * n, n) / (n + 1); break;
    default: break;
    }
  }
  if (len >= 4) {
    limits.check(order);
    const Permutation shape = reduce(word);
    const Poset p = dc_pop({Word(shape.begin(), shape.end())});
    for (unsigned n = 0; n <= order; ++n) c[n] = count_avoiders(p, n, limits);
  } else if (len == 0) {
    throw invalid_input("empty chain");
  }
  return TruncatedEgf(std::move(c));
}

/// Avoidance e.g.f. for a DC POP given by its chain words.
inline TruncatedEgf dc_series(const std::vector<Word>& words, unsigned order, const EnumerationLimits& limits = {}) {
  (void)dc_pop(words);  // validates labelling
  std::vector<TruncatedEgf> chains;
  for (const auto& w : words) chains.push_back(chain_avoidance_egf(w, order, limits));
  return dc_pop_egf(chains);
}

} // namespace popkit
