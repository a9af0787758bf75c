#pragma once

// Truncated power series over exact rationals: univariate (UniSeries) and
// bivariate in (x, z) (TruncatedSeries). Functional equations are solved by
// fixed-point iteration; every result is exact up to its truncation order.

#include "kpaths/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kpaths {

// ---------------------------------------------------------------------------
// Univariate

/// Coefficients c_0..c_N of a series known modulo x^{N+1}.
class UniSeries {
 public:
  explicit UniSeries(unsigned order) : c_(order + 1, BigRat(0)) {}
  explicit UniSeries(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
  }

  static UniSeries constant(const BigRat& v, unsigned order) {
    UniSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static UniSeries x(unsigned order) {
    UniSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }
  /// (1 + c x)^a for rational a, by the generalized binomial series.
  static UniSeries binomial_series(const BigRat& a, const BigRat& c, unsigned order) {
    UniSeries s(order);
    for (unsigned n = 0; n <= order; ++n) s.c_[n] = binomial_gen(a, n) * kpaths::pow(c, n);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const BigRat& operator[](unsigned n) const { return c_.at(n); }
  BigRat& operator[](unsigned n) { return c_.at(n); }
  const std::vector<BigRat>& coeffs() const { return c_; }

  UniSeries truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    UniSeries s(order);
    for (unsigned n = 0; n <= order; ++n) s.c_[n] = c_[n];
    return s;
  }

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.order(), b.order()));
    for (unsigned n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] + b.c_[n];
    return s;
  }
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.order(), b.order()));
    for (unsigned n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] - b.c_[n];
    return s;
  }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.order(), b.order()));
    const unsigned n_max = s.order();
    for (unsigned i = 0; i <= n_max; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; i + j <= n_max; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }
  friend UniSeries operator*(const BigRat& k, const UniSeries& a) {
    UniSeries s = a;
    for (auto& v : s.c_) v *= k;
    return s;
  }

  UniSeries pow(unsigned e) const {
    UniSeries result = constant(BigRat(1), order());
    UniSeries base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  /// d/dx; the result is known to one order less.
  UniSeries derivative() const {
    if (order() == 0) return UniSeries(0);
    UniSeries s(order() - 1);
    for (unsigned n = 1; n <= order(); ++n) s.c_[n - 1] = BigRat(n) * c_[n];
    return s;
  }

  /// Multiplicative inverse; needs a nonzero constant term.
  UniSeries reciprocal() const {
    if (c_[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
    UniSeries g(order());
    const BigRat inv0 = 1 / c_[0];
    g.c_[0] = inv0;
    for (unsigned n = 1; n <= order(); ++n) {
      BigRat acc(0);
      for (unsigned i = 1; i <= n; ++i) acc += c_[i] * g.c_[n - i];
      g.c_[n] = -inv0 * acc;
    }
    return g;
  }

  /// this(inner(x)); `inner` must have zero constant term.
  UniSeries compose(const UniSeries& inner) const {
    if (inner.c_[0] != 0) throw std::domain_error("compose: inner series has nonzero constant term");
    const unsigned n = std::min(order(), inner.order());
    const UniSeries in = inner.truncated(n);
    UniSeries result = constant(c_[n], n);
    for (unsigned i = n; i-- > 0;) result = result * in + constant(c_[i], n);
    return result;
  }

  /// f(x)/x for f with zero constant term; known to one order less.
  UniSeries divided_by_x() const {
    if (c_[0] != 0) throw std::domain_error("divided_by_x: nonzero constant term");
    if (order() == 0) throw std::domain_error("divided_by_x: no information left");
    return UniSeries(std::vector<BigRat>(c_.begin() + 1, c_.end()));
  }

  /// Compositional inverse g with f(g(x)) = x, from the fixed point
  /// g = x * R(g) where R = x/f. Needs f_0 = 0 and f_1 != 0.
  UniSeries reversion() const {
    if (c_[0] != 0 || order() < 1 || c_[1] == 0) {
      throw std::domain_error("reversion needs f_0 = 0 and f_1 != 0");
    }
    const unsigned n = order();
    const UniSeries r = divided_by_x().reciprocal();  // order n-1
    UniSeries g(n);
    for (unsigned it = 0; it <= n; ++it) {
      const UniSeries rg = r.compose(g.truncated(n - 1));
      UniSeries next(n);
      for (unsigned i = 0; i + 1 <= n; ++i) next.c_[i + 1] = rg.c_[i];
      if (next == g) break;
      g = std::move(next);
    }
    return g;
  }

  bool operator==(const UniSeries&) const = default;

 private:
  std::vector<BigRat> c_;
};

/// [x^n] Phi(g(x)) where g is the compositional inverse of f, computed as
/// (1/n) [x^{n-1}] Phi'(x) (x/f(x))^n.
inline BigRat lagrange_coeff(const UniSeries& phi, const UniSeries& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("lagrange_coeff: n >= 1");
  if (f[0] != 0) throw std::domain_error("lagrange_coeff: f must have zero constant term");
  if (f.order() < 1 || f[1] == 0) throw std::domain_error("lagrange_coeff: f_1 must be nonzero");
  if (f.order() < n || phi.order() < n) throw std::invalid_argument("lagrange_coeff: series truncated below n");
  const UniSeries x_over_f = f.truncated(n).divided_by_x().reciprocal();  // order n-1
  const UniSeries body = phi.truncated(n).derivative() * x_over_f.pow(n);
  return body[n - 1] / BigRat(n);
}

/// f^lambda for rational lambda and f_0 = 1, from x g' f = lambda f' g:
///   n g_n = sum_{i=1}^{n} ((lambda + 1) i - n) f_i g_{n-i}.
inline UniSeries rational_power(const UniSeries& f, const BigRat& lambda) {
  if (f[0] != 1) throw std::domain_error("rational_power: need f_0 = 1");
  const unsigned order = f.order();
  std::vector<BigRat> g(order + 1, BigRat(0));
  g[0] = 1;
  for (unsigned n = 1; n <= order; ++n) {
    BigRat acc(0);
    for (unsigned i = 1; i <= n; ++i) {
      acc += ((lambda + 1) * BigRat(i) - BigRat(n)) * f[i] * g[n - i];
    }
    g[n] = acc / BigRat(n);
  }
  return UniSeries(std::move(g));
}

/// f with f = 1 + x f^p (complete p-ary plane trees), by fixed point.
inline UniSeries pary_tree_gf(unsigned p, unsigned order) {
  if (p == 0) throw std::invalid_argument("pary_tree_gf: p >= 1");
  const UniSeries one = UniSeries::constant(BigRat(1), order);
  const UniSeries x = UniSeries::x(order);
  UniSeries f = one;
  for (unsigned it = 0; it <= order + 1; ++it) {
    UniSeries next = one + x * f.pow(p);
    if (next == f) break;
    f = std::move(next);
  }
  return f;
}

/// (l+1)/(k n + l + 1) * C((k+1) n + l, n) = [x^n] f^{l+1} for f = 1 + x f^{k+1}.
inline BigInt fuss_catalan(unsigned k, unsigned n, unsigned ell) {
  const BigRat v = make_rat(static_cast<long>(ell + 1), static_cast<long>(k * n + ell + 1)) *
                   BigRat(binomial(static_cast<long>((k + 1) * n + ell), n));
  return require_integer(v, "fuss_catalan");
}

enum class SegmentGf { tilde, bar };

/// Generating function of the tilde / bar counts:
///   tilde: (1-x)^{-(2l+1)} f(x^2/(1-x)^{2k})^{l+1}
///   bar:   (1-x)^{-(l+1)}  f(x^2/(1-x)^{k+1})^{l+1}
/// with f = 1 + x f^{k+1}.
inline UniSeries gf_tilde_bar(SegmentGf which, unsigned k, unsigned ell, unsigned order) {
  if (k == 0) throw std::invalid_argument("gf_tilde_bar: k >= 1");
  if (ell >= k) throw std::invalid_argument("gf_tilde_bar: need ell < k");
  const bool tilde = which == SegmentGf::tilde;
  const UniSeries f = pary_tree_gf(k + 1, order);
  const long inner_exp = tilde ? 2L * k : static_cast<long>(k) + 1;
  const long outer_exp = tilde ? 2L * ell + 1 : static_cast<long>(ell) + 1;
  const UniSeries x = UniSeries::x(order);
  const UniSeries w = x * x * UniSeries::binomial_series(BigRat(-inner_exp), BigRat(-1), order);
  return UniSeries::binomial_series(BigRat(-outer_exp), BigRat(-1), order) * f.compose(w).pow(ell + 1);
}

/// Both sides of the x -> x/(1+x) substitution identity:
///   tilde: (1+x)^{-(2l+1)} Pt(x/(1+x)) = f(x^2 (1+x)^{2k-2})^{l+1}
///   bar:   (1+x)^{-(l+1)}  Pb(x/(1+x)) = f(x^2 (1+x)^{k-1})^{l+1}
inline std::pair<UniSeries, UniSeries> substitution_identity(SegmentGf which, unsigned k, unsigned ell,
                                                             unsigned order) {
  const bool tilde = which == SegmentGf::tilde;
  const UniSeries gf = gf_tilde_bar(which, k, ell, order);
  const UniSeries x = UniSeries::x(order);
  const UniSeries s = x * UniSeries::binomial_series(BigRat(-1), BigRat(1), order);
  const long outer_exp = tilde ? 2L * ell + 1 : static_cast<long>(ell) + 1;
  UniSeries lhs = UniSeries::binomial_series(BigRat(-outer_exp), BigRat(1), order) * gf.compose(s);

  const UniSeries f = pary_tree_gf(k + 1, order);
  const long inner_exp = tilde ? 2L * k - 2 : static_cast<long>(k) - 1;
  const UniSeries w = x * x * UniSeries::binomial_series(BigRat(inner_exp), BigRat(1), order);
  UniSeries rhs = f.compose(w).pow(ell + 1);
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Bivariate

/// Coefficients of x^a z^b for a <= N_x, b <= N_z. Unset coefficients are zero.
class TruncatedSeries {
 public:
  TruncatedSeries(unsigned nx, unsigned nz) : nx_(nx), nz_(nz), c_((nx + 1) * (nz + 1), BigRat(0)) {}

  static TruncatedSeries constant(const BigRat& v, unsigned nx, unsigned nz) {
    TruncatedSeries s(nx, nz);
    s.at(0, 0) = v;
    return s;
  }
  static TruncatedSeries monomial(const BigRat& v, unsigned a, unsigned b, unsigned nx, unsigned nz) {
    TruncatedSeries s(nx, nz);
    if (a <= nx && b <= nz) s.at(a, b) = v;
    return s;
  }
  static TruncatedSeries x(unsigned nx, unsigned nz) { return monomial(BigRat(1), 1, 0, nx, nz); }
  static TruncatedSeries z(unsigned nx, unsigned nz) { return monomial(BigRat(1), 0, 1, nx, nz); }

  unsigned nx() const { return nx_; }
  unsigned nz() const { return nz_; }

  /// [x^a z^b]; zero beyond the stored range is not implied, so this throws.
  const BigRat& coeff(unsigned a, unsigned b) const {
    if (a > nx_ || b > nz_) throw std::out_of_range("coefficient beyond truncation");
    return c_[index(a, b)];
  }
  BigRat& at(unsigned a, unsigned b) {
    if (a > nx_ || b > nz_) throw std::out_of_range("coefficient beyond truncation");
    return c_[index(a, b)];
  }

  TruncatedSeries truncated(unsigned nx, unsigned nz) const {
    if (nx > nx_ || nz > nz_) throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries s(nx, nz);
    for (unsigned a = 0; a <= nx; ++a)
      for (unsigned b = 0; b <= nz; ++b) s.at(a, b) = coeff(a, b);
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRat& v) { return v == 0; });
  }

  /// Smallest x-degree with a nonzero coefficient (nx()+1 if none).
  unsigned x_valuation() const {
    for (unsigned a = 0; a <= nx_; ++a)
      for (unsigned b = 0; b <= nz_; ++b)
        if (coeff(a, b) != 0) return a;
    return nx_ + 1;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q) {
    return combine(p, q, [](const BigRat& u, const BigRat& v) { return BigRat(u + v); });
  }
  friend TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q) {
    return combine(p, q, [](const BigRat& u, const BigRat& v) { return BigRat(u - v); });
  }
  friend TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q) {
    TruncatedSeries s(std::min(p.nx_, q.nx_), std::min(p.nz_, q.nz_));
    for (unsigned a1 = 0; a1 <= s.nx_; ++a1) {
      for (unsigned b1 = 0; b1 <= s.nz_; ++b1) {
        const BigRat& u = p.coeff(a1, b1);
        if (u == 0) continue;
        for (unsigned a2 = 0; a1 + a2 <= s.nx_; ++a2)
          for (unsigned b2 = 0; b1 + b2 <= s.nz_; ++b2) {
            const BigRat& v = q.coeff(a2, b2);
            if (v != 0) s.at(a1 + a2, b1 + b2) += u * v;
          }
      }
    }
    return s;
  }
  friend TruncatedSeries operator*(const BigRat& k, const TruncatedSeries& p) {
    TruncatedSeries s = p;
    for (auto& v : s.c_) v *= k;
    return s;
  }

  TruncatedSeries pow(unsigned e) const {
    TruncatedSeries result = constant(BigRat(1), nx_, nz_);
    TruncatedSeries base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// d/dx; known to one x-order less.
  TruncatedSeries derivative_x() const {
    if (nx_ == 0) return TruncatedSeries(0, nz_);
    TruncatedSeries s(nx_ - 1, nz_);
    for (unsigned a = 1; a <= nx_; ++a)
      for (unsigned b = 0; b <= nz_; ++b) s.at(a - 1, b) = BigRat(a) * coeff(a, b);
    return s;
  }

  /// Multiplicative inverse; needs a nonzero constant term.
  TruncatedSeries reciprocal() const {
    const BigRat& c0 = coeff(0, 0);
    if (c0 == 0) throw std::domain_error("reciprocal of a series with zero constant term");
    const BigRat inv0 = 1 / c0;
    TruncatedSeries g(nx_, nz_);
    for (unsigned a = 0; a <= nx_; ++a) {
      for (unsigned b = 0; b <= nz_; ++b) {
        if (a == 0 && b == 0) {
          g.at(0, 0) = inv0;
          continue;
        }
        BigRat acc(0);
        for (unsigned i = 0; i <= a; ++i)
          for (unsigned j = 0; j <= b; ++j) {
            if (i == 0 && j == 0) continue;
            const BigRat& u = coeff(i, j);
            if (u != 0) acc += u * g.coeff(a - i, b - j);
          }
        g.at(a, b) = -inv0 * acc;
      }
    }
    return g;
  }

  /// outer(this) for a univariate `outer`; this series must have zero constant
  /// term and `outer` must be known far enough for the result to be exact.
  TruncatedSeries compose_into(const UniSeries& outer) const {
    if (coeff(0, 0) != 0) throw std::domain_error("compose: inner series has nonzero constant term");
    // inner^i vanishes below x-degree i when x divides inner, otherwise below
    // total degree i.
    const unsigned needed = x_valuation() >= 1 ? nx_ : nx_ + nz_;
    if (outer.order() < needed) throw std::invalid_argument("compose: outer series truncated too early");
    TruncatedSeries result = constant(outer[needed], nx_, nz_);
    for (unsigned i = needed; i-- > 0;) result = result * (*this) + constant(outer[i], nx_, nz_);
    return result;
  }

  /// s(x, z x): [x^{a+b} z^b] of the result is [x^a z^b] of this.
  TruncatedSeries substitute_z_by_zx() const {
    TruncatedSeries s(nx_, nz_);
    for (unsigned a = 0; a <= nx_; ++a)
      for (unsigned b = 0; b <= nz_ && a + b <= nx_; ++b) s.at(a + b, b) = coeff(a, b);
    return s;
  }

  /// s(x, z)/x for s divisible by x.
  TruncatedSeries divided_by_x() const {
    if (nx_ == 0) throw std::domain_error("divided_by_x: no information left");
    TruncatedSeries s(nx_ - 1, nz_);
    for (unsigned b = 0; b <= nz_; ++b) {
      if (coeff(0, b) != 0) throw std::domain_error("divided_by_x: series not divisible by x");
    }
    for (unsigned a = 1; a <= nx_; ++a)
      for (unsigned b = 0; b <= nz_; ++b) s.at(a - 1, b) = coeff(a, b);
    return s;
  }

  /// {"(a,b)": "num/den", ...} over nonzero coefficients, ordered by (a, b).
  std::string to_json() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (unsigned a = 0; a <= nx_; ++a)
      for (unsigned b = 0; b <= nz_; ++b) {
        const BigRat& v = coeff(a, b);
        if (v == 0) continue;
        if (!first) out << ',';
        first = false;
        out << "\"(" << a << ',' << b << ")\":\"" << kpaths::to_string(v) << '"';
      }
    out << '}';
    return out.str();
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::size_t index(unsigned a, unsigned b) const { return static_cast<std::size_t>(a) * (nz_ + 1) + b; }

  template <class Op>
  static TruncatedSeries combine(const TruncatedSeries& p, const TruncatedSeries& q, Op op) {
    TruncatedSeries s(std::min(p.nx_, q.nx_), std::min(p.nz_, q.nz_));
    for (unsigned a = 0; a <= s.nx_; ++a)
      for (unsigned b = 0; b <= s.nz_; ++b) s.at(a, b) = op(p.coeff(a, b), q.coeff(a, b));
    return s;
  }

  unsigned nx_;
  unsigned nz_;
  std::vector<BigRat> c_;
};

/// T(w) = 1 + t_1 w + ... + t_n w^n as a univariate series of order n.
inline UniSeries weight_polynomial(const WeightVector& t, unsigned n) {
  t.require(n);
  UniSeries s(n);
  s[0] = 1;
  for (unsigned i = 1; i <= n; ++i) s[i] = t[i];
  return s;
}

/// The unique y with zero constant term and y = (x + z y) T(y), where
/// y = x P(x, z; t). Fixed-point iteration from y = 0; every step fixes at
/// least one more total degree, so it stops after at most N_x + N_z + 1 steps.
inline TruncatedSeries solve_y(const WeightVector& t, unsigned nx, unsigned nz) {
  if (nx < 1) throw std::invalid_argument("solve_y: N_x >= 1");
  const UniSeries tw = weight_polynomial(t, nx);
  const TruncatedSeries x = TruncatedSeries::x(nx, nz);
  const TruncatedSeries z = TruncatedSeries::z(nx, nz);
  TruncatedSeries y(nx, nz);
  for (unsigned it = 0; it <= nx + nz + 1; ++it) {
    TruncatedSeries next = (x + z * y) * y.compose_into(tw);
    if (next == y) return y;
    y = std::move(next);
  }
  throw std::logic_error("solve_y: fixed point did not converge");
}

enum class GfFamily { P, Q, F, H, QInternal };

/// Generating functions in (x, z) of the path families:
///   P = y/x                     (alpha statistics on P-paths)
///   Q = T(y) = P/(1 + zP)       (alpha statistics on Q-paths)
///   F = (1 + zP)/(1 - xP)       (beta statistics on P-paths)
///   H = (1 - y)/(1 - y - x - zy)  (u-segments starting above the axis on Q-paths)
///   QInternal = 1/(1 - y)       (beta statistics on Q-paths)
/// [x^m z^j] of each is the weighted sum over the family with m up-steps and
/// j horizontal steps. H is the decomposition published for beta on Q-paths;
/// it weights the trailing factor by H instead of Q and so counts a different
/// statistic.
inline TruncatedSeries gf_family(GfFamily which, const WeightVector& t, unsigned nx, unsigned nz) {
  const TruncatedSeries one = TruncatedSeries::constant(BigRat(1), nx, nz);
  const TruncatedSeries x = TruncatedSeries::x(nx, nz);
  const TruncatedSeries z = TruncatedSeries::z(nx, nz);
  switch (which) {
    case GfFamily::P: return solve_y(t, nx + 1, nz).divided_by_x();
    case GfFamily::Q: return solve_y(t, nx, nz).compose_into(weight_polynomial(t, nx));
    case GfFamily::F: {
      const TruncatedSeries p = solve_y(t, nx + 1, nz).divided_by_x();
      return (one + z * p) * (one - x * p).reciprocal();
    }
    case GfFamily::H: {
      const TruncatedSeries y = solve_y(t, nx, nz);
      return (one - y) * (one - y - x - z * y).reciprocal();
    }
    case GfFamily::QInternal: return (one - solve_y(t, nx, nz)).reciprocal();
  }
  throw std::invalid_argument("gf_family: unknown family");
}

/// [x^m z^j] P(x, z; t).
inline const BigRat& count_from_p(const TruncatedSeries& p, unsigned m, unsigned j) { return p.coeff(m, j); }

/// [x^{m+j+1} z^j] y*, y* = y(x, z x); equal to [x^m z^j] P.
inline const BigRat& count_from_ystar(const TruncatedSeries& ystar, unsigned m, unsigned j) {
  return ystar.coeff(m + j + 1, j);
}

}  // namespace kpaths
