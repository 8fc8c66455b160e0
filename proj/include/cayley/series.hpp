#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace cayley {

/// Truncated counting sequence a_0..a_N of exact signed integers; a_n is the
/// number of structures of size n (negative values arise for virtual species).
/// Binary operations truncate to the shorter operand and never read past it.
struct CountSeq {
  std::vector<Int> a;

  CountSeq() = default;
  explicit CountSeq(std::vector<Int> coeffs) : a(std::move(coeffs)) {}
  static CountSeq zeros(int order) {
    return CountSeq(std::vector<Int>(static_cast<size_t>(order) + 1, Int(0)));
  }

  int order() const { return static_cast<int>(a.size()) - 1; }
  const Int& at(int n) const { return a.at(static_cast<size_t>(n)); }
  Int& at(int n) { return a.at(static_cast<size_t>(n)); }

  friend bool operator==(const CountSeq& x, const CountSeq& y) = default;
};

enum class SeriesView { egf, ogf };

/// Truncated power series with exact rational coefficients. The view tag
/// records whether c_n is a_n/n! (EGF) or a_n (OGF) of a counting sequence.
struct RatSeries {
  std::vector<Rat> c;
  SeriesView view = SeriesView::ogf;

  int order() const { return static_cast<int>(c.size()) - 1; }
  const Rat& at(int n) const { return c.at(static_cast<size_t>(n)); }

  friend bool operator==(const RatSeries& x, const RatSeries& y) = default;
};

namespace series {

namespace detail {

inline int min_order(const CountSeq& x, const CountSeq& y) {
  return std::min(x.order(), y.order());
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Truncated product of rational coefficient vectors (both of size N+1).
inline std::vector<Rat> trunc_mul(const std::vector<Rat>& x, const std::vector<Rat>& y, int order) {
  std::vector<Rat> r(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      r[static_cast<size_t>(i + j)] += x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
    }
  }
  return r;
}

// Horner evaluation of sum_i coeffs[i] * inner^i, truncated; inner[0] must be 0.
inline std::vector<Rat> trunc_compose(const std::vector<Rat>& coeffs,
                                      const std::vector<Rat>& inner, int order) {
  require(inner[0] == 0, "composition requires zero constant term");
  std::vector<Rat> r(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = order; i >= 0; --i) {
    r = trunc_mul(r, inner, order);
    r[0] += coeffs[static_cast<size_t>(i)];
  }
  return r;
}

}  // namespace detail

// ---- linear operations -------------------------------------------------------

inline CountSeq add(const CountSeq& x, const CountSeq& y) {
  const int n = detail::min_order(x, y);
  CountSeq r = CountSeq::zeros(n);
  for (int i = 0; i <= n; ++i) r.at(i) = x.at(i) + y.at(i);
  return r;
}

inline CountSeq sub(const CountSeq& x, const CountSeq& y) {
  const int n = detail::min_order(x, y);
  CountSeq r = CountSeq::zeros(n);
  for (int i = 0; i <= n; ++i) r.at(i) = x.at(i) - y.at(i);
  return r;
}

inline CountSeq scalar_mul(const Int& c, const CountSeq& x) {
  CountSeq r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

inline CountSeq truncate(const CountSeq& x, int order) {
  detail::require(order >= 0 && order <= x.order(), "truncate: bad order");
  CountSeq r = x;
  r.a.resize(static_cast<size_t>(order) + 1);
  return r;
}

/// Nonempty part: same counts with a_0 zeroed.
inline CountSeq plus_part(const CountSeq& x) {
  CountSeq r = x;
  if (!r.a.empty()) r.a[0] = 0;
  return r;
}

inline CountSeq even_part(const CountSeq& x) {
  CountSeq r = x;
  for (int i = 1; i <= r.order(); i += 2) r.at(i) = 0;
  return r;
}

inline CountSeq odd_part(const CountSeq& x) {
  CountSeq r = x;
  for (int i = 0; i <= r.order(); i += 2) r.at(i) = 0;
  return r;
}

// ---- species operations ------------------------------------------------------

/// Product of species: binomial convolution, c_n = sum_i C(n,i) a_i b_{n-i}.
inline CountSeq species_product(const CountSeq& x, const CountSeq& y) {
  const int n = detail::min_order(x, y);
  CountSeq r = CountSeq::zeros(n);
  for (int m = 0; m <= n; ++m) {
    Int s = 0;
    for (int i = 0; i <= m; ++i) s += binomial(m, i) * x.at(i) * y.at(m - i);
    r.at(m) = s;
  }
  return r;
}

/// Composition F(G); requires b_0 = 0. Computed exactly over rational EGFs and
/// converted back to counts (integral by construction for genuine species).
inline CountSeq compose(const CountSeq& x, const CountSeq& y) {
  detail::require(y.order() >= 0 && y.at(0) == 0, "compose: inner constant term must be 0");
  const int n = detail::min_order(x, y);
  std::vector<Rat> xs(static_cast<size_t>(n) + 1), ys(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Int f = factorial(i);
    xs[static_cast<size_t>(i)] = Rat(x.at(i), f);
    ys[static_cast<size_t>(i)] = Rat(y.at(i), f);
  }
  auto rs = detail::trunc_compose(xs, ys, n);
  CountSeq r = CountSeq::zeros(n);
  for (int i = 0; i <= n; ++i) {
    Rat v = rs[static_cast<size_t>(i)] * factorial(i);
    if (!is_integer(v)) throw std::domain_error("compose: non-integral coefficient");
    r.at(i) = numerator(v);
  }
  return r;
}

/// Derivative: a'_n = a_{n+1} (order drops by one).
inline CountSeq derivative(const CountSeq& x) {
  detail::require(x.order() >= 1, "derivative: order must be >= 1");
  CountSeq r = CountSeq::zeros(x.order() - 1);
  for (int i = 0; i <= r.order(); ++i) r.at(i) = x.at(i + 1);
  return r;
}

/// Integral: shift right with zero constant term (order grows by one).
inline CountSeq integral(const CountSeq& x) {
  CountSeq r = CountSeq::zeros(x.order() + 1);
  for (int i = 0; i <= x.order(); ++i) r.at(i + 1) = x.at(i);
  return r;
}

/// Pointing: a_n -> n * a_n.
inline CountSeq pointing(const CountSeq& x) {
  CountSeq r = x;
  for (int i = 0; i <= r.order(); ++i) r.at(i) *= i;
  return r;
}

/// Ordinal product: plain convolution c_n = sum_{i+j=n} a_i b_j.
inline CountSeq ordinal_product(const CountSeq& x, const CountSeq& y) {
  const int n = detail::min_order(x, y);
  CountSeq r = CountSeq::zeros(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.at(i + j) += x.at(i) * y.at(j);
  return r;
}

/// Convolution F*G = F (.) X (.) G: c_0 = 0, c_n = sum_{i+j=n-1} a_i b_j.
inline CountSeq convolution(const CountSeq& x, const CountSeq& y) {
  const int n = detail::min_order(x, y);
  CountSeq r = CountSeq::zeros(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j + 1 <= n; ++j) r.at(i + j + 1) += x.at(i) * y.at(j);
  return r;
}

/// Species-product inverse; integral when a_0 is +-1.
inline CountSeq reciprocal(const CountSeq& x) {
  detail::require(x.order() >= 0 && x.at(0) != 0, "reciprocal: a_0 must be nonzero");
  detail::require(x.at(0) == 1 || x.at(0) == -1, "reciprocal: a_0 must be +-1 for integer counts");
  CountSeq r = CountSeq::zeros(x.order());
  r.at(0) = x.at(0);  // 1/(+-1)
  for (int n = 1; n <= x.order(); ++n) {
    Int s = 0;
    for (int i = 1; i <= n; ++i) s += binomial(n, i) * x.at(i) * r.at(n - i);
    r.at(n) = -x.at(0) * s;
  }
  return r;
}

/// Solves species_product(y, result) = x exactly; rejects non-integral quotients.
inline CountSeq divide(const CountSeq& x, const CountSeq& y) {
  detail::require(y.order() >= 0 && y.at(0) != 0, "divide: divisor constant term must be nonzero");
  const int n = detail::min_order(x, y);
  std::vector<Rat> q(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rat s = Rat(x.at(m));
    for (int i = 1; i <= m; ++i) s -= Rat(binomial(m, i) * y.at(i)) * q[static_cast<size_t>(m - i)];
    q[static_cast<size_t>(m)] = s / Rat(y.at(0));
  }
  CountSeq r = CountSeq::zeros(n);
  for (int m = 0; m <= n; ++m) {
    if (!is_integer(q[static_cast<size_t>(m)]))
      throw std::domain_error("divide: non-integral coefficient");
    r.at(m) = numerator(q[static_cast<size_t>(m)]);
  }
  return r;
}

// ---- transforms between a sequence and its primitive part --------------------

/// From the counts of G to the counts of F with F' = E.G':
/// F[n] = sum_{j=1..n} C(n-1, j-1) G[j]; F[0] = 1 by convention.
inline CountSeq binomial_transform(const CountSeq& g) {
  CountSeq f = CountSeq::zeros(g.order());
  if (f.order() >= 0) f.at(0) = 1;
  for (int n = 1; n <= g.order(); ++n) {
    Int s = 0;
    for (int j = 1; j <= n; ++j) s += binomial(n - 1, j - 1) * g.at(j);
    f.at(n) = s;
  }
  return f;
}

/// Inverse direction, running from n >= 0 (so G[0] = 0 always):
/// G[n] = sum_{j=1..n} (-1)^(n-j) C(n-1, j-1) F[j].
inline CountSeq inverse_binomial_transform(const CountSeq& f) {
  CountSeq g = CountSeq::zeros(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    Int s = 0;
    for (int j = 1; j <= n; ++j) {
      Int term = binomial(n - 1, j - 1) * f.at(j);
      s += ((n - j) % 2 == 0) ? term : -term;
    }
    g.at(n) = s;
  }
  return g;
}

// ---- generating-series views ---------------------------------------------------

inline RatSeries to_egf(const CountSeq& x) {
  RatSeries r;
  r.view = SeriesView::egf;
  r.c.resize(static_cast<size_t>(x.order()) + 1);
  for (int i = 0; i <= x.order(); ++i) r.c[static_cast<size_t>(i)] = Rat(x.at(i), factorial(i));
  return r;
}

inline RatSeries to_ogf(const CountSeq& x) {
  RatSeries r;
  r.view = SeriesView::ogf;
  r.c.resize(static_cast<size_t>(x.order()) + 1);
  for (int i = 0; i <= x.order(); ++i) r.c[static_cast<size_t>(i)] = Rat(x.at(i));
  return r;
}

inline RatSeries egf_to_ogf(const RatSeries& s) {
  detail::require(s.view == SeriesView::egf, "egf_to_ogf: expected EGF view");
  RatSeries r;
  r.view = SeriesView::ogf;
  r.c.resize(s.c.size());
  for (int i = 0; i <= s.order(); ++i) r.c[static_cast<size_t>(i)] = s.at(i) * factorial(i);
  return r;
}

inline RatSeries ogf_to_egf(const RatSeries& s) {
  detail::require(s.view == SeriesView::ogf, "ogf_to_egf: expected OGF view");
  RatSeries r;
  r.view = SeriesView::egf;
  r.c.resize(s.c.size());
  for (int i = 0; i <= s.order(); ++i) r.c[static_cast<size_t>(i)] = s.at(i) / Rat(factorial(i));
  return r;
}

/// Back to counts; rejects non-integral coefficients.
inline CountSeq counts_of(const RatSeries& s) {
  RatSeries ogf = s.view == SeriesView::ogf ? s : egf_to_ogf(s);
  CountSeq r = CountSeq::zeros(ogf.order());
  for (int i = 0; i <= ogf.order(); ++i) {
    if (!is_integer(ogf.at(i))) throw std::domain_error("counts_of: non-integral coefficient");
    r.at(i) = numerator(ogf.at(i));
  }
  return r;
}

// ---- OGF-level transform pack -------------------------------------------------

/// Multiplication by x: prepends a zero (integral counterpart).
inline RatSeries ogf_shift(const RatSeries& s) {
  RatSeries r = s;
  r.c.insert(r.c.begin(), Rat(0));
  return r;
}

/// (A - a_0)/x: drops the constant term (derivative counterpart; the usual
/// statement (A-1)/x assumes a_0 = 1).
inline RatSeries ogf_divshift(const RatSeries& s) {
  detail::require(s.order() >= 1, "ogf_divshift: order must be >= 1");
  RatSeries r = s;
  r.c.erase(r.c.begin());
  return r;
}

/// A(x/(1+x))/(1+x) (the inverse-binomial-transform counterpart).
inline RatSeries ogf_substitute_x_over_1px(const RatSeries& s) {
  detail::require(s.view == SeriesView::ogf, "substitution operates on the OGF view");
  const int n = s.order();
  std::vector<Rat> inner(static_cast<size_t>(n) + 1, Rat(0));  // x/(1+x)
  for (int i = 1; i <= n; ++i) inner[static_cast<size_t>(i)] = (i % 2 == 1) ? Rat(1) : Rat(-1);
  auto composed = detail::trunc_compose(s.c, inner, n);
  std::vector<Rat> geom(static_cast<size_t>(n) + 1);  // 1/(1+x)
  for (int i = 0; i <= n; ++i) geom[static_cast<size_t>(i)] = (i % 2 == 0) ? Rat(1) : Rat(-1);
  RatSeries r;
  r.view = SeriesView::ogf;
  r.c = detail::trunc_mul(composed, geom, n);
  return r;
}

/// Truncated formal square root; requires c_0 = 1.
inline RatSeries series_sqrt(const RatSeries& s) {
  detail::require(s.order() >= 0 && s.at(0) == 1, "series_sqrt: constant term must be 1");
  RatSeries r = s;
  r.c.assign(s.c.size(), Rat(0));
  r.c[0] = 1;
  for (int n = 1; n <= s.order(); ++n) {
    Rat acc = s.at(n);
    for (int i = 1; i < n; ++i) acc -= r.c[static_cast<size_t>(i)] * r.c[static_cast<size_t>(n - i)];
    r.c[static_cast<size_t>(n)] = acc / 2;
  }
  return r;
}

inline RatSeries rat_add(const RatSeries& x, const RatSeries& y) {
  const int n = std::min(x.order(), y.order());
  RatSeries r;
  r.view = x.view;
  r.c.resize(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) r.c[static_cast<size_t>(i)] = x.at(i) + y.at(i);
  return r;
}

inline RatSeries rat_mul(const RatSeries& x, const RatSeries& y) {
  const int n = std::min(x.order(), y.order());
  RatSeries r;
  r.view = x.view;
  std::vector<Rat> a(x.c.begin(), x.c.begin() + n + 1), b(y.c.begin(), y.c.begin() + n + 1);
  r.c = detail::trunc_mul(a, b, n);
  return r;
}

inline RatSeries rat_scale(const Rat& c, const RatSeries& x) {
  RatSeries r = x;
  for (auto& v : r.c) v *= c;
  return r;
}

/// Multiplicative inverse of a rational series with nonzero constant term.
inline RatSeries rat_reciprocal(const RatSeries& x) {
  detail::require(x.order() >= 0 && x.at(0) != 0, "rat_reciprocal: constant term must be nonzero");
  RatSeries r = x;
  r.c.assign(x.c.size(), Rat(0));
  r.c[0] = Rat(1) / x.at(0);
  for (int n = 1; n <= x.order(); ++n) {
    Rat s = 0;
    for (int i = 1; i <= n; ++i) s += x.at(i) * r.c[static_cast<size_t>(n - i)];
    r.c[static_cast<size_t>(n)] = -s / x.at(0);
  }
  return r;
}

// ---- builders -----------------------------------------------------------------

inline CountSeq make_one(int order) {
  CountSeq r = CountSeq::zeros(order);
  r.at(0) = 1;
  return r;
}

inline CountSeq make_X(int order) {
  CountSeq r = CountSeq::zeros(order);
  if (order >= 1) r.at(1) = 1;
  return r;
}

inline CountSeq make_E(int order) {
  CountSeq r = CountSeq::zeros(order);
  for (int i = 0; i <= order; ++i) r.at(i) = 1;
  return r;
}

inline CountSeq make_E_plus(int order) { return plus_part(make_E(order)); }
inline CountSeq make_E_even(int order) { return even_part(make_E(order)); }
inline CountSeq make_E_odd(int order) { return odd_part(make_E(order)); }

inline CountSeq make_E_exactly(int k, int order) {
  CountSeq r = CountSeq::zeros(order);
  if (k >= 0 && k <= order) r.at(k) = 1;
  return r;
}

/// Linear orders: n!.
inline CountSeq make_L(int order) {
  CountSeq r = CountSeq::zeros(order);
  for (int i = 0; i <= order; ++i) r.at(i) = factorial(i);
  return r;
}

/// Cyclic permutations: (n-1)! for n >= 1.
inline CountSeq make_cyc(int order) {
  CountSeq r = CountSeq::zeros(order);
  for (int i = 1; i <= order; ++i) r.at(i) = factorial(i - 1);
  return r;
}

}  // namespace series
}  // namespace cayley
