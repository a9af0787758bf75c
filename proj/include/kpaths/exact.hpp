#pragma once

// Exact scalars and the combinatorial kernel: binomials, multinomials,
// Stirling numbers, partial Bell polynomials and potential polynomials.
//
// Every value is exact. BigInt/BigRat are GMP's mpz_class/mpq_class; never
// bind a GMP arithmetic expression to `auto` (it would capture an expression
// template, not a value).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpaths {

using BigInt = mpz_class;
using BigRat = mpq_class;

// ---------------------------------------------------------------------------
// Scalar helpers

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigRat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

/// Returns the numerator of an integral rational; throws when `q` has a
/// nontrivial denominator. Used wherever a quantity is a cardinality.
inline BigInt require_integer(const BigRat& q, std::string_view what = "value") {
  if (!is_integer(q)) {
    throw std::logic_error(std::string(what) + " is not an integer: " + q.get_str());
  }
  return q.get_num();
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const BigRat& q) { return q.get_str(); }

/// Parses "a", "-a" or "a/b" in base 10.
inline BigRat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den(1);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    BigInt v;
    if (v.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("not an integer: " + std::string(s));
    }
    return v;
  };
  if (slash == std::string_view::npos) {
    num = parse_int(text);
  } else {
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
  }
  return make_rat(num, den);
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigRat pow(const BigRat& base, unsigned long e) {
  BigRat result(1);
  BigRat b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
  return result;
}

// ---------------------------------------------------------------------------
// Binomials

/// C(n, k) for n >= 0. Out-of-range lower index (k < 0 or k > n) gives 0,
/// which is what makes boundary terms like C(m+j, j-1) at j = 0 vanish.
inline BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index, use generalized binomial");
  if (k < 0 || k > n) return 0;
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

/// Generalized binomial a(a-1)...(a-k+1)/k! for rational a.
inline BigRat binomial_gen(const BigRat& a, unsigned long k) {
  BigRat num(1);
  for (unsigned long i = 0; i < k; ++i) num *= a - BigRat(static_cast<long>(i));
  num /= BigRat(factorial(k));
  return num;
}

/// r! / (parts_1! parts_2! ...). The parts must sum to r.
inline BigInt multinomial(unsigned long r, std::span<const unsigned> parts) {
  unsigned long sum = 0;
  BigInt den(1);
  for (unsigned p : parts) {
    sum += p;
    den *= factorial(p);
  }
  if (sum != r) throw std::invalid_argument("multinomial: parts do not sum to r");
  return factorial(r) / den;
}

// ---------------------------------------------------------------------------
// Stirling numbers

namespace detail {

// Row-by-row triangle; next(n, k, prev_row) gives entry (n, k) from row n-1.
template <class Next>
BigInt stirling_triangle(unsigned n, unsigned k, Next next) {
  if (k > n) return 0;
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;  // (0, 0)
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned c = std::min(i, k); c >= 1; --c) row[c] = next(i, c, row);
    row[0] = 0;
  }
  return row[k];
}

}  // namespace detail

/// Stirling number of the second kind S(n, k).
inline BigInt stirling2(unsigned n, unsigned k) {
  return detail::stirling_triangle(n, k, [](unsigned, unsigned c, const std::vector<BigInt>& row) {
    return BigInt(c * row[c] + row[c - 1]);
  });
}

/// Unsigned Stirling number of the first kind |s(n, k)|.
inline BigInt stirling1_unsigned(unsigned n, unsigned k) {
  return detail::stirling_triangle(n, k, [](unsigned i, unsigned c, const std::vector<BigInt>& row) {
    return BigInt((i - 1) * row[c] + row[c - 1]);
  });
}

// ---------------------------------------------------------------------------
// Weights

/// Exact weights t_1..t_M for the formal variables t_i, with t_0 = 1 implied
/// by T(x) = 1 + sum t_i x^i. Indexing is 1-based.
class WeightVector {
 public:
  explicit WeightVector(std::vector<BigRat> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("WeightVector: need M >= 1");
  }

  static WeightVector ones(std::size_t m) { return WeightVector(std::vector<BigRat>(m, BigRat(1))); }

  std::size_t size() const { return weights_.size(); }

  /// t_i; t_0 is 1.
  const BigRat& operator[](std::size_t i) const {
    static const BigRat one(1);
    if (i == 0) return one;
    if (i > weights_.size()) throw std::out_of_range("WeightVector: index beyond M");
    return weights_[i - 1];
  }

  std::span<const BigRat> values() const { return weights_; }

  /// (1!t_1, 2!t_2, ..., m!t_m), the argument the Bell-polynomial forms use.
  std::vector<BigRat> factorial_scaled(std::size_t m) const {
    require(m);
    std::vector<BigRat> out;
    out.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) out.emplace_back(BigRat(factorial(i)) * weights_[i - 1]);
    return out;
  }

  void require(std::size_t m) const {
    if (weights_.size() < m) {
      throw std::invalid_argument("WeightVector: need " + std::to_string(m) + " weights, have " +
                                  std::to_string(weights_.size()));
    }
  }

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<BigRat> weights_;
};

// ---------------------------------------------------------------------------
// Set-partition shapes

/// One nonnegative solution of r_1+...+r_m = r, r_1+2r_2+...+m r_m = m.
/// counts[i-1] holds r_i.
struct KappaSolution {
  std::vector<unsigned> counts;

  unsigned blocks() const {
    unsigned s = 0;
    for (unsigned c : counts) s += c;
    return s;
  }
  unsigned weight() const {
    unsigned s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += static_cast<unsigned>(i + 1) * counts[i];
    return s;
  }
  bool operator==(const KappaSolution&) const = default;
};

/// Visits every solution in decreasing lexicographic order of (r_1, r_2, ...).
inline void for_each_kappa(unsigned m, unsigned r, const std::function<void(const KappaSolution&)>& visit) {
  if (m == 0) return;
  KappaSolution cur{std::vector<unsigned>(m, 0)};
  // Assign r_i for i = 1..m; `left` blocks of total size `size_left` remain.
  std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned i, unsigned left, unsigned size_left) {
    if (i > m) {
      if (left == 0 && size_left == 0) visit(cur);
      return;
    }
    // Remaining blocks each have size >= i, so need left*i <= size_left.
    unsigned hi = std::min(left, size_left / i);
    for (unsigned c = hi + 1; c-- > 0;) {
      unsigned rest_left = left - c;
      unsigned rest_size = size_left - c * i;
      if (rest_left * (i + 1) > rest_size && rest_left != 0) continue;
      if (rest_left == 0 && rest_size != 0) continue;
      cur.counts[i - 1] = c;
      rec(i + 1, rest_left, rest_size);
      cur.counts[i - 1] = 0;
    }
  };
  rec(1, r, m);
}

inline std::vector<KappaSolution> kappa_solutions(unsigned m, unsigned r) {
  std::vector<KappaSolution> out;
  for_each_kappa(m, r, [&](const KappaSolution& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------
// Bell and potential polynomials

/// Partial Bell polynomial B_{m,r}(x_1, ..., x_m), evaluated through the
/// explicit sum over kappa_m(r):
///   sum m!/(r_1! ... r_m!) prod (x_i/i!)^{r_i}.
inline BigRat bell_partial(unsigned m, unsigned r, std::span<const BigRat> x) {
  if (x.size() < m) throw std::invalid_argument("bell_partial: need at least m arguments");
  if (m == 0) return BigRat(r == 0 ? 1 : 0);
  if (r == 0 || r > m) return BigRat(0);

  std::vector<BigRat> scaled;  // x_i / i!
  scaled.reserve(m);
  for (unsigned i = 1; i <= m; ++i) scaled.emplace_back(x[i - 1] / BigRat(factorial(i)));

  const BigInt m_fact = factorial(m);
  BigRat total(0);
  for_each_kappa(m, r, [&](const KappaSolution& s) {
    BigRat term(m_fact);
    for (unsigned i = 1; i <= m; ++i) {
      const unsigned c = s.counts[i - 1];
      if (c == 0) continue;
      term /= BigRat(factorial(c));
      term *= pow(scaled[i - 1], c);
    }
    total += term;
  });
  return total;
}

/// Potential polynomial P_m^{(lambda)}(f_1, f_2, ...) with
/// 1 + sum P_n x^n/n! = (1 + sum f_n x^n/n!)^lambda.
inline BigRat potential_poly(unsigned m, const BigRat& lambda, std::span<const BigRat> f) {
  if (f.size() < m) throw std::invalid_argument("potential_poly: need at least m arguments");
  if (m == 0) return BigRat(1);
  BigRat total(0);
  for (unsigned k = 1; k <= m; ++k) {
    total += binomial_gen(lambda, k) * BigRat(factorial(k)) * bell_partial(m, k, f);
  }
  return total;
}

/// [x^p] T(x)^lambda for T(x) = 1 + sum t_i x^i, via P_p^{(lambda)}(1!t_1, 2!t_2, ...)/p!.
inline BigRat weight_power_coeff(const WeightVector& t, const BigRat& lambda, unsigned p) {
  if (p == 0) return BigRat(1);
  const std::vector<BigRat> f = t.factorial_scaled(p);
  return potential_poly(p, lambda, f) / BigRat(factorial(p));
}

}  // namespace kpaths
