#pragma once

// Closed-form evaluators for the segment-statistic counts, the (u,h)- and
// u-segment congruence counts, their inversion partners, the Catalan-family
// identities, and weight-vector specializations.

#include "kpaths/exact.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpaths {

// ---------------------------------------------------------------------------
// Formula identifiers

enum class FormulaId {
  thm2_2,
  cor2_3,
  type_count_P,
  thm3_2,
  thm4_2,
  cor4_3,
  type_count_Q,
  thm5_2,
  thm6_1,
  thm6_2,
  cor6_0_tilde,
  cor6_0_bar,
  cor6_1_tilde,
  cor6_1_bar,
  catalan_expr1,
  catalan_expr2,
  riordan_expr,
};

inline constexpr std::array<std::pair<FormulaId, std::string_view>, 17> kFormulaNames{{
    {FormulaId::thm2_2, "thm2.2"},
    {FormulaId::cor2_3, "cor2.3"},
    {FormulaId::type_count_P, "type-p"},
    {FormulaId::thm3_2, "thm3.2"},
    {FormulaId::thm4_2, "thm4.2"},
    {FormulaId::cor4_3, "cor4.3"},
    {FormulaId::type_count_Q, "type-q"},
    {FormulaId::thm5_2, "thm5.2"},
    {FormulaId::thm6_1, "thm6.1"},
    {FormulaId::thm6_2, "thm6.2"},
    {FormulaId::cor6_0_tilde, "cor6.0-tilde"},
    {FormulaId::cor6_0_bar, "cor6.0-bar"},
    {FormulaId::cor6_1_tilde, "cor6.1-tilde"},
    {FormulaId::cor6_1_bar, "cor6.1-bar"},
    {FormulaId::catalan_expr1, "catalan-expr1"},
    {FormulaId::catalan_expr2, "catalan-expr2"},
    {FormulaId::riordan_expr, "riordan"},
}};

inline std::string_view to_string(FormulaId id) {
  for (const auto& [key, name] : kFormulaNames) {
    if (key == id) return name;
  }
  throw std::logic_error("unnamed FormulaId");
}

inline std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (const auto& [key, name_] : kFormulaNames) {
    if (name_ == name) return key;
  }
  return std::nullopt;
}

/// "ok", or "paper-erratum" when the published formula disagrees with
/// enumeration of the statistic it claims to count.
inline std::string_view formula_status(FormulaId id) {
  return id == FormulaId::thm5_2 ? "paper-erratum" : "ok";
}

// ---------------------------------------------------------------------------
// Parameter checks

namespace detail {

inline void check_kj(unsigned k, unsigned j) {
  if (k == 0 && j != 0) throw std::invalid_argument("k = 0 requires j = 0");
}

inline void check_ell(unsigned k, unsigned ell) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (ell >= k) throw std::invalid_argument("ell must be < k");
}

inline BigRat frac(const BigInt& a, const BigInt& b) { return make_rat(a, b); }

inline BigRat frac(long a, long b) { return make_rat(a, b); }

// sum_{r=0}^{p} C(lambda, r) r!/p! B_{p,r}(1!t_1, 2!t_2, ...), i.e. [x^p] T^lambda
// written through Bell polynomials.
inline BigRat bell_power_sum(const WeightVector& t, unsigned p, long lambda) {
  if (p == 0) return BigRat(1);
  const std::vector<BigRat> f = t.factorial_scaled(p);
  BigRat s(0);
  for (unsigned r = 1; r <= p; ++r) {
    s += BigRat(binomial(lambda, r) * factorial(r)) / BigRat(factorial(p)) * bell_partial(p, r, f);
  }
  return s;
}

inline BigRat bell_term(const WeightVector& t, unsigned m, unsigned r, long lambda) {
  const std::vector<BigRat> f = t.factorial_scaled(m);
  return BigRat(binomial(lambda, r) * factorial(r)) / BigRat(factorial(m)) * bell_partial(m, r, f);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// u-segment counts over nonnegative paths

/// Sum over nonnegative k-paths with m ups and j horizontals of prod t_i^{alpha_i}.
inline BigRat weighted_count_P(unsigned k, unsigned m, unsigned j, const WeightVector& t) {
  detail::check_kj(k, j);
  if (m == 0) return BigRat(1);
  t.require(m);
  const BigRat lead = detail::frac(binomial(m + j, m), BigInt(m + 1));
  return lead * detail::bell_power_sum(t, m, m + j + 1);
}

/// As weighted_count_P, restricted to paths with exactly r u-segments.
inline BigRat weighted_count_P_r(unsigned k, unsigned m, unsigned j, unsigned r, const WeightVector& t) {
  detail::check_kj(k, j);
  if (r < 1 || r > m) throw std::invalid_argument("r must satisfy 1 <= r <= m");
  t.require(m);
  const BigRat lead = detail::frac(binomial(m + j, m), BigInt(m + 1));
  return lead * detail::bell_term(t, m, r, m + j + 1);
}

/// Sum over nonnegative paths with no horizontal step on the axis.
inline BigRat weighted_count_Q(unsigned k, unsigned m, unsigned j, const WeightVector& t) {
  detail::check_kj(k, j);
  if (m == 0) return BigRat(j == 0 ? 1 : 0);
  t.require(m);
  const BigRat lead = detail::frac(BigInt(m) * binomial(m + j, j), BigInt((m + j + 1) * (m + j)));
  return lead * detail::bell_power_sum(t, m, m + j + 1);
}

inline BigRat weighted_count_Q_r(unsigned k, unsigned m, unsigned j, unsigned r, const WeightVector& t) {
  detail::check_kj(k, j);
  if (r < 1 || r > m) throw std::invalid_argument("r must satisfy 1 <= r <= m");
  t.require(m);
  const BigRat lead = detail::frac(BigInt(m) * binomial(m + j, j), BigInt((m + j + 1) * (m + j)));
  return lead * detail::bell_term(t, m, r, m + j + 1);
}

enum class Family { P, Q };

/// Number of paths whose u-segments have type 1^{r_1} 2^{r_2} ...;
/// r_vec[i-1] holds r_i.
inline BigInt type_count(Family family, unsigned m, unsigned j, std::span<const unsigned> r_vec) {
  unsigned r = 0;
  unsigned weight = 0;
  for (std::size_t i = 0; i < r_vec.size(); ++i) {
    r += r_vec[i];
    weight += static_cast<unsigned>(i + 1) * r_vec[i];
  }
  if (weight != m || r == 0) throw std::invalid_argument("type does not describe m up-steps in r >= 1 segments");
  const BigInt shape = binomial(m + j + 1, r) * multinomial(r, r_vec);
  BigRat value;
  if (family == Family::P) {
    value = detail::frac(binomial(m + j, m) * shape, BigInt(m + 1));
  } else {
    value = detail::frac(BigInt(m) * binomial(m + j, m) * shape, BigInt((m + j + 1) * (m + j)));
  }
  return require_integer(value, "type count");
}

// ---------------------------------------------------------------------------
// Internal u-segment counts

/// Sum over nonnegative paths of prod t_i^{beta_i}, beta counting every
/// u-segment except one starting the path.
inline BigRat weighted_count_internal_P(unsigned k, unsigned m, unsigned j, const WeightVector& t) {
  detail::check_kj(k, j);
  if (m == 0 && j == 0) return BigRat(1);
  t.require(m);
  const long mj = m + j;
  BigRat total(0);
  for (unsigned p = 0; p <= m; ++p) {
    const long num = static_cast<long>(m + 1) * (m - p) + static_cast<long>(j) * (m - p + 1);
    total += detail::frac(num, static_cast<long>(m + 1) * mj) * detail::bell_power_sum(t, p, mj);
  }
  return BigRat(binomial(mj, j)) * total;
}

/// The published double sum for beta over paths with no horizontal step on
/// the axis. Its values disagree with that count; they weight only the
/// u-segments starting strictly above the axis. weighted_count_internal_Q_corrected
/// gives the beta count. The j = 0, i = m term reads 0/0 and is taken as 1,
/// the value of the Lagrange term it comes from.
inline BigRat weighted_count_internal_Q(unsigned k, unsigned m, unsigned j, const WeightVector& t) {
  detail::check_kj(k, j);
  if (m + j == 0) throw std::invalid_argument("m + j must be >= 1");
  t.require(m);
  BigRat total(0);
  for (unsigned i = 0; i <= m; ++i) {
    const long lambda = static_cast<long>(m + j - i);
    if (lambda == 0) {
      if (j == 0) total += 1;
      continue;
    }
    BigRat first(0);
    for (unsigned r = 0; r + i + 1 <= m; ++r) {
      first += BigRat(binomial(r + i, r)) * weight_power_coeff(t, BigRat(lambda), m - i - r - 1);
    }
    BigRat second(0);
    for (unsigned r = 0; r + i <= m; ++r) {
      second += BigRat(binomial(r + i, r)) * weight_power_coeff(t, BigRat(lambda), m - i - r);
    }
    const BigRat coeff = detail::frac(static_cast<long>(i), lambda);
    total += coeff * (BigRat(binomial(m + j - 1, j)) * first + BigRat(binomial(m + j - 1, static_cast<long>(j) - 1)) * second);
  }
  return total;
}

/// Sum over paths with no horizontal step on the axis of prod t_i^{beta_i}:
/// C(m+j, j)/(m+j) * sum_{p<m} (m-p) [x^p] T^{m+j}.
inline BigRat weighted_count_internal_Q_corrected(unsigned k, unsigned m, unsigned j, const WeightVector& t) {
  detail::check_kj(k, j);
  if (m + j == 0) throw std::invalid_argument("m + j must be >= 1");
  if (m == 0) return BigRat(0);
  t.require(m);
  const long mj = m + j;
  BigRat total(0);
  for (unsigned p = 0; p < m; ++p) {
    total += BigRat(static_cast<long>(m - p)) * detail::bell_power_sum(t, p, mj);
  }
  return detail::frac(binomial(mj, j), BigInt(mj)) * total;
}

// ---------------------------------------------------------------------------
// Congruence-conditioned counts

/// (ell+1)/(kn+ell+1) C((k+1)n+ell, n) = [x^n] f^{ell+1} with f = 1 + x f^{k+1}.
inline BigRat fuss_term(unsigned k, unsigned n, unsigned ell) {
  return detail::frac(binomial(static_cast<long>(k + 1) * n + ell, n) * (ell + 1),
                      BigInt(static_cast<long>(k) * n + ell + 1));
}

/// Paths of length kr + 2 ell whose internal (u,h)-segments have up-counts
/// divisible by k and whose first one has up-count = ell mod k.
inline BigInt count_tilde(unsigned r, unsigned k, unsigned ell) {
  detail::check_ell(k, ell);
  BigRat total(0);
  for (unsigned p = 0; 2 * p <= r; ++p) {
    total += fuss_term(k, p, ell) * BigRat(binomial(r + 2L * (k - 1) * p + 2L * ell, r - 2 * p));
  }
  return require_integer(total, "tilde count");
}

/// Same with u-segments in place of (u,h)-segments.
inline BigInt count_bar(unsigned r, unsigned k, unsigned ell) {
  detail::check_ell(k, ell);
  BigRat total(0);
  for (unsigned p = 0; 2 * p <= r; ++p) {
    total += fuss_term(k, p, ell) * BigRat(binomial(r + static_cast<long>(k - 1) * p + ell, r - 2 * p));
  }
  return require_integer(total, "bar count");
}

enum class InversionId { cor6_0_tilde, cor6_0_bar, cor6_1_tilde, cor6_1_bar };

/// Both sides of an inversion identity between the congruence counts and the
/// Fuss-Catalan numbers.
inline std::pair<BigRat, BigRat> inversion_check(InversionId which, unsigned n, unsigned k, unsigned ell) {
  detail::check_ell(k, ell);
  BigRat lhs(0);
  BigRat rhs(0);
  const auto sign = [](unsigned e) { return (e % 2 == 0) ? BigRat(1) : BigRat(-1); };
  switch (which) {
    case InversionId::cor6_0_tilde:
      for (unsigned p = 0; p <= n; ++p) {
        lhs += sign(n - p) * BigRat(binomial(n + 2 * ell, p + 2 * ell) * count_tilde(p, k, ell));
      }
      for (unsigned p = 0; 2 * p <= n; ++p) {
        rhs += fuss_term(k, p, ell) * BigRat(binomial(2L * (k - 1) * p, static_cast<long>(n) - 2 * p));
      }
      break;
    case InversionId::cor6_0_bar:
      for (unsigned p = 0; p <= n; ++p) {
        lhs += sign(n - p) * BigRat(binomial(n + ell, p + ell) * count_bar(p, k, ell));
      }
      for (unsigned p = 0; 2 * p <= n; ++p) {
        rhs += fuss_term(k, p, ell) * BigRat(binomial(static_cast<long>(k - 1) * p, static_cast<long>(n) - 2 * p));
      }
      break;
    case InversionId::cor6_1_tilde: {
      lhs = fuss_term(k, n, ell);
      const long top = 2L * k * n + 2L * ell + 1;
      for (unsigned p = 0; p <= 2 * n; ++p) {
        rhs += sign(p) * detail::frac(static_cast<long>(k) * p + 2L * ell + 1, top) *
               BigRat(binomial(top, 2L * n - p) * count_tilde(p, k, ell));
      }
      break;
    }
    case InversionId::cor6_1_bar: {
      lhs = fuss_term(k, n, ell);
      const long den = 2L * n * (k + 1) + 2L * (ell + 1);
      for (unsigned p = 0; p <= 2 * n; ++p) {
        rhs += sign(p) * detail::frac(static_cast<long>(p) * (k + 1) + 2L * (ell + 1), den) *
               BigRat(binomial(static_cast<long>(n) * (k + 1) + ell + 1, 2L * n - p) * count_bar(p, k, ell));
      }
      break;
    }
  }
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Sequences

inline BigInt catalan(unsigned n) { return binomial(2L * n, n) / (n + 1); }

inline BigInt motzkin(unsigned n) {
  BigInt s(0);
  for (unsigned p = 0; 2 * p <= n; ++p) s += binomial(n, 2 * p) * catalan(p);
  return s;
}

/// Alternating binomial transform of the Catalan numbers.
inline BigInt riordan(unsigned n) {
  BigInt s(0);
  for (unsigned p = 0; p <= n; ++p) {
    const BigInt term = binomial(n, p) * catalan(p);
    if ((n - p) % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

/// sum_p 1/(2p+1) C(3p, p) C(p, n-2p).
inline BigInt riordan_rhs(unsigned n) {
  BigRat s(0);
  for (unsigned p = 0; 2 * p <= n; ++p) {
    s += detail::frac(binomial(3L * p, p) * binomial(p, n - 2 * p), BigInt(2 * p + 1));
  }
  return require_integer(s, "riordan rhs");
}

inline BigInt catalan_expr1(unsigned n) {
  BigRat s(0);
  for (unsigned p = 0; 2 * p <= n; ++p) {
    s += detail::frac(binomial(3L * p, p) * binomial(n + p, 3L * p), BigInt(2 * p + 1));
  }
  return require_integer(s, "catalan expr1");
}

inline BigInt catalan_expr2(unsigned n) {
  if (n == 0) throw std::invalid_argument("catalan-expr2 requires n >= 1");
  BigRat s(0);
  for (unsigned p = 0; 2 * p + 1 <= n; ++p) {
    s += detail::frac(binomial(3L * p + 1, p + 1) * binomial(n + p, 3L * p + 1), BigInt(2 * p + 1));
  }
  return require_integer(s, "catalan expr2");
}

enum class Sequence { catalan, motzkin, riordan, catalan_expr1, catalan_expr2 };

inline BigInt sequence(Sequence id, unsigned n) {
  switch (id) {
    case Sequence::catalan:
      return catalan(n);
    case Sequence::motzkin:
      return motzkin(n);
    case Sequence::riordan:
      return riordan(n);
    case Sequence::catalan_expr1:
      return catalan_expr1(n);
    case Sequence::catalan_expr2:
      return catalan_expr2(n);
  }
  throw std::logic_error("unknown sequence");
}

struct IdentityCheck {
  std::string name;
  BigRat lhs;
  BigRat rhs;
};

/// The four Catalan identities obtained from the k = 2, ell = 0 case.
inline std::vector<IdentityCheck> catalan_identities(unsigned n) {
  std::vector<IdentityCheck> out;
  out.push_back({"riordan", BigRat(riordan(n)), BigRat(riordan_rhs(n))});

  BigRat a(0);
  for (unsigned p = 0; p <= n; ++p) {
    const BigRat term(binomial(n + 1, p + 1) * catalan(p + 1));
    a += ((n - p) % 2 == 0) ? term : BigRat(-term);
  }
  BigRat b(0);
  for (unsigned p = 0; 2 * p <= n; ++p) {
    b += detail::frac(binomial(3L * p + 1, p + 1) * binomial(p, n - 2 * p), BigInt(2 * p + 1));
  }
  out.push_back({"shifted-riordan", a, b});

  BigRat c(0);
  BigRat e(0);
  for (unsigned p = 0; p <= 2 * n; ++p) {
    const BigRat sgn(p % 2 == 0 ? 1 : -1);
    c += sgn * detail::frac(3L * p + 2, 2L * n + 2L * p + 2) * BigRat(binomial(3L * n, n + p) * catalan(p));
    e += sgn * detail::frac(3L * p + 4, 2L * n + 2L * p + 4) * BigRat(binomial(3L * n + 1, n + p + 1) * catalan(p + 1));
  }
  out.push_back({"ternary", c, detail::frac(binomial(3L * n, n), BigInt(2 * n + 1))});
  out.push_back({"ternary-shifted", e, detail::frac(binomial(3L * n + 1, n + 1), BigInt(2 * n + 1))});
  return out;
}

// ---------------------------------------------------------------------------
// Weight specializations

struct WeightSpec {
  enum class Kind { exp, xexp, expm1, logm, qlog, negbinom, bounded, marked, multiples, pary, ones, custom };
  Kind kind = Kind::ones;
  std::vector<BigRat> params;

  /// "name" or "name:a,b,...", e.g. "exp:1", "marked:2,3/2", "custom:1,0,1/3".
  static WeightSpec parse(std::string_view text);
};

namespace detail {

struct WeightKindInfo {
  WeightSpec::Kind kind;
  std::string_view name;
  int arity;  // -1: any
};

inline constexpr std::array<WeightKindInfo, 12> kWeightKinds{{
    {WeightSpec::Kind::exp, "exp", 1},
    {WeightSpec::Kind::xexp, "xexp", 1},
    {WeightSpec::Kind::expm1, "expm1", 0},
    {WeightSpec::Kind::logm, "logm", 0},
    {WeightSpec::Kind::qlog, "qlog", 1},
    {WeightSpec::Kind::negbinom, "negbinom", 1},
    {WeightSpec::Kind::bounded, "bounded", 1},
    {WeightSpec::Kind::marked, "marked", 2},
    {WeightSpec::Kind::multiples, "multiples", 2},
    {WeightSpec::Kind::pary, "pary", 2},
    {WeightSpec::Kind::ones, "ones", 0},
    {WeightSpec::Kind::custom, "custom", -1},
}};

inline unsigned positive_nat(const BigRat& q, std::string_view what) {
  if (!is_integer(q) || q < 1 || q > 1000000) throw std::invalid_argument(std::string(what) + " must be a positive integer");
  return static_cast<unsigned>(q.get_num().get_ui());
}

}  // namespace detail

inline WeightSpec WeightSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  WeightSpec spec;
  const detail::WeightKindInfo* info = nullptr;
  for (const auto& k : detail::kWeightKinds) {
    if (k.name == name) info = &k;
  }
  if (info == nullptr) throw std::invalid_argument("unknown weight family: " + std::string(name));
  spec.kind = info->kind;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      spec.params.push_back(parse_rat(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (info->arity >= 0 && spec.params.size() != static_cast<std::size_t>(info->arity)) {
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(info->arity) + " parameter(s)");
  }
  if (info->arity < 0 && spec.params.empty()) throw std::invalid_argument("custom needs at least one weight");
  return spec;
}

/// t_1..t_M for a named family. custom pads with zeros beyond its list.
inline WeightVector expand_weights(const WeightSpec& spec, std::size_t M) {
  using Kind = WeightSpec::Kind;
  if (M == 0) throw std::invalid_argument("M must be >= 1");
  const auto& a = spec.params;
  std::vector<BigRat> t;
  t.reserve(M);
  unsigned r = 0;
  unsigned p = 0;
  switch (spec.kind) {
    case Kind::bounded:
    case Kind::marked:
    case Kind::multiples:
      r = detail::positive_nat(a.at(0), "r");
      break;
    case Kind::pary:
      p = detail::positive_nat(a.at(0), "p");
      r = detail::positive_nat(a.at(1), "r");
      break;
    default:
      break;
  }
  for (unsigned i = 1; i <= M; ++i) {
    switch (spec.kind) {
      case Kind::exp:
        t.push_back(a[0] / BigRat(factorial(i)));
        break;
      case Kind::xexp:
        t.push_back(a[0] / BigRat(factorial(i - 1)));
        break;
      case Kind::expm1:
        t.push_back(BigRat(1) / BigRat(factorial(i + 1)));
        break;
      case Kind::logm:
        t.push_back(detail::frac(1, i + 1));
        break;
      case Kind::qlog:
        t.push_back(a[0] / BigRat(static_cast<long>(i)));
        break;
      case Kind::negbinom:
        t.push_back(binomial_gen(a[0] + BigRat(static_cast<long>(i) - 1), i));
        break;
      case Kind::bounded:
        t.emplace_back(i <= r ? 1 : 0);
        break;
      case Kind::marked:
        t.push_back(i == r ? a[1] : BigRat(1));
        break;
      case Kind::multiples:
        t.push_back(i % r == 0 ? a[1] : BigRat(0));
        break;
      case Kind::pary:
        t.push_back(detail::frac(binomial(static_cast<long>(p) * i + r, i) * r, BigInt(static_cast<long>(p) * i + r)));
        break;
      case Kind::ones:
        t.emplace_back(1);
        break;
      case Kind::custom:
        t.push_back(i <= a.size() ? a[i - 1] : BigRat(0));
        break;
    }
  }
  return WeightVector(std::move(t));
}

// ---------------------------------------------------------------------------
// Closed forms of the weight specializations (sums of prod t_i^{alpha_i}
// over nonnegative paths). All need m >= 1.

namespace detail {

inline void require_m(unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
}

inline BigRat lead_P(unsigned m, unsigned j) { return frac(binomial(m + j, m), BigInt(m + 1)); }

}  // namespace detail

/// t_i = q/i!, first form.
inline BigRat example_exp(const BigRat& q, unsigned m, unsigned j) {
  detail::require_m(m);
  const unsigned N = m + j + 1;
  BigRat s(0);
  for (unsigned i = 0; i <= m; ++i) s += BigRat(binomial(N, i) * factorial(i) * stirling2(m, i)) * pow(q, i);
  return s * detail::frac(binomial(N, j), BigInt(N)) / BigRat(factorial(m));
}

/// t_i = q/i!, second form; the sum runs over i = 0..m+j+1.
inline BigRat example_exp_alt(const BigRat& q, unsigned m, unsigned j) {
  detail::require_m(m);
  const unsigned N = m + j + 1;
  BigRat s(0);
  for (unsigned i = 0; i <= N; ++i) s += BigRat(binomial(N, i) * pow(BigInt(i), m)) * pow(q, i) * pow(BigRat(1) - q, N - i);
  return s * detail::frac(binomial(N, j), BigInt(N)) / BigRat(factorial(m));
}

/// t_i = 1/i!, scaled by m!: C(m+j+1, j) (m+j+1)^{m-1}.
inline BigInt example_exp_unit(unsigned m, unsigned j) {
  detail::require_m(m);
  return binomial(m + j + 1, j) * pow(BigInt(m + j + 1), m - 1);
}

inline BigRat example_exp_r(const BigRat& q, unsigned m, unsigned j, unsigned r) {
  detail::require_m(m);
  const unsigned N = m + j + 1;
  return detail::frac(binomial(N, j) * binomial(N, r) * factorial(r) * stirling2(m, r), BigInt(N) * factorial(m)) * pow(q, r);
}

/// t_i = q/(i-1)!.
inline BigRat example_xexp_r(const BigRat& q, unsigned m, unsigned j, unsigned r) {
  detail::require_m(m);
  if (r > m) return BigRat(0);
  const unsigned N = m + j + 1;
  return detail::frac(binomial(N, j) * binomial(N, r) * pow(BigInt(r), m - r), BigInt(N) * factorial(m - r)) * pow(q, r);
}

/// t_i = 1/(i+1)!.
inline BigRat example_expm1(unsigned m, unsigned j) {
  detail::require_m(m);
  return detail::frac(factorial(m + j) * binomial(m + j + 1, j) * stirling2(2 * m + j + 1, m + j + 1), factorial(2 * m + j + 1));
}

/// t_i = 1/(i+1).
inline BigRat example_logm(unsigned m, unsigned j) {
  detail::require_m(m);
  return detail::frac(factorial(m + j) * binomial(m + j + 1, j) * stirling1_unsigned(2 * m + j + 1, m + j + 1),
                      factorial(2 * m + j + 1));
}

/// t_i = q/i.
inline BigRat example_qlog_r(const BigRat& q, unsigned m, unsigned j, unsigned r) {
  detail::require_m(m);
  return detail::lead_P(m, j) *
         detail::frac(binomial(m + j + 1, r) * factorial(r) * stirling1_unsigned(m, r), factorial(m)) * pow(q, r);
}

/// t_i = C(lambda+i-1, i).
inline BigRat example_negbinom(const BigRat& lambda, unsigned m, unsigned j) {
  detail::require_m(m);
  return detail::lead_P(m, j) * binomial_gen(lambda * BigRat(static_cast<long>(m + j + 1)) + BigRat(static_cast<long>(m) - 1), m);
}

/// t_i = 1 for i <= r, 0 beyond.
inline BigRat example_bounded(unsigned r, unsigned m, unsigned j) {
  detail::require_m(m);
  BigInt s(0);
  for (unsigned i = 0; i <= m + 1; ++i) {
    const long top = 2L * m + j - static_cast<long>(r + 1) * i;
    if (top < 0) continue;
    const BigInt term = binomial(m + j + 1, i) * binomial(top, m + j);
    if (i % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return detail::lead_P(m, j) * BigRat(s);
}

/// t_i = 1 except t_r = q.
inline BigRat example_marked(unsigned r, const BigRat& q, unsigned m, unsigned j) {
  detail::require_m(m);
  BigRat s(0);
  for (unsigned i = 0; i <= m; ++i) {
    const long top = 2L * m + j - static_cast<long>(r + 1) * i;
    if (top < 0) continue;
    s += BigRat(binomial(m + j + 1, i) * binomial(top, static_cast<long>(m + j) - i)) * pow(q - 1, i);
  }
  return detail::lead_P(m, j) * s;
}

/// t_i = q when r | i, else 0. Zero unless r | m.
inline BigRat example_multiples(unsigned r, const BigRat& q, unsigned m, unsigned j) {
  detail::require_m(m);
  if (r == 0) throw std::invalid_argument("r must be >= 1");
  if (m % r != 0) return BigRat(0);
  const unsigned mm = m / r;
  BigRat s(0);
  for (unsigned i = 1; i <= mm; ++i) s += BigRat(binomial(m + j + 1, i) * binomial(mm - 1, mm - i)) * pow(q, i);
  return detail::lead_P(m, j) * s;
}

/// Number of paths all of whose u-segment lengths are multiples of r.
inline BigRat example_multiples_unit(unsigned r, unsigned m, unsigned j) {
  detail::require_m(m);
  if (r == 0) throw std::invalid_argument("r must be >= 1");
  if (m % r != 0) return BigRat(0);
  const unsigned mm = m / r;
  return detail::lead_P(m, j) * BigRat(binomial(static_cast<long>(r + 1) * mm + j, mm));
}

/// t_i = r/(pi+r) C(pi+r, i).
inline BigRat example_pary(unsigned p, unsigned r, unsigned m, unsigned j) {
  detail::require_m(m);
  const long nr = static_cast<long>(m + j + 1) * r;
  return detail::lead_P(m, j) * detail::frac(nr, nr + static_cast<long>(m) * p) *
         BigRat(binomial(nr + static_cast<long>(m) * p, m));
}

/// Cardinality of the nonnegative family at unit weights: C(m+j,m) C(2m+j,m)/(m+1).
inline BigInt example_unit_cardinality(unsigned m, unsigned j) {
  return require_integer(detail::lead_P(m, j) * BigRat(binomial(2L * m + j, m)), "cardinality");
}

}  // namespace kpaths
