#pragma once

// Verification harness: every closed form, series identity and bijection is
// checked against an independent computation (exhaustive enumeration, series
// arithmetic, or a second formula). Checks are grouped into tasks that can
// run on several threads; results are merged in task order and failures
// sorted by case id, so the report does not depend on the thread count.

#include "kpaths/bijections.hpp"
#include "kpaths/exact.hpp"
#include "kpaths/formulas.hpp"
#include "kpaths/lattice.hpp"
#include "kpaths/series.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace kpaths {

struct CaseResult {
  std::string id;
  std::string expected;
  std::string actual;
  bool ok = true;
};

class CaseSink {
 public:
  using IdFilter = std::function<bool(const std::string&)>;

  CaseSink() = default;
  /// Checks whose id is rejected by `keep` are skipped and not counted.
  explicit CaseSink(IdFilter keep) : keep_(std::move(keep)) {}

  template <class A, class B>
  void check(std::string id, const A& expected, const B& actual) {
    if (keep_ && !keep_(id)) return;
    ++run_;
    const std::string e = text(expected);
    const std::string a = text(actual);
    const bool same = equal(expected, actual);
    if (!same) failures_.push_back({std::move(id), e, a, false});
  }

  void check_true(std::string id, bool cond, std::string detail = {}) {
    if (keep_ && !keep_(id)) return;
    ++run_;
    if (!cond) failures_.push_back({std::move(id), "true", detail.empty() ? "false" : std::move(detail), false});
  }

  std::size_t run() const { return run_; }
  const std::vector<CaseResult>& failures() const { return failures_; }

 private:
  static std::string text(const BigInt& v) { return v.get_str(); }
  static std::string text(const BigRat& v) { return v.get_str(); }
  static std::string text(const std::string& v) { return v; }
  static std::string text(const LatticePath& v) { return v.to_string(); }
  static std::string text(const MarkedPath& v) { return v.base.to_string() + "@" + std::to_string(v.mark); }
  static std::string text(const SegmentProfile& v) {
    std::string s = "{";
    for (const auto& [len, c] : v.counts) s += (s.size() > 1 ? "," : "") + std::to_string(len) + ":" + std::to_string(c);
    return s + "}";
  }
  static std::string text(const UniSeries& v) {
    std::string s;
    for (const auto& c : v.coeffs()) s += (s.empty() ? "" : ",") + c.get_str();
    return "[" + s + "]";
  }

  static bool equal(const BigInt& a, const BigInt& b) { return a == b; }
  static bool equal(const BigRat& a, const BigRat& b) { return a == b; }
  static bool equal(const BigInt& a, const BigRat& b) { return BigRat(a) == b; }
  static bool equal(const BigRat& a, const BigInt& b) { return a == BigRat(b); }
  template <class T>
  static bool equal(const T& a, const T& b) {
    return a == b;
  }

  IdFilter keep_;
  std::size_t run_ = 0;
  std::vector<CaseResult> failures_;
};

using Task = std::function<void(CaseSink&)>;

struct RunReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<CaseResult> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// Runs the tasks on `jobs` threads and merges the sinks deterministically.
inline RunReport run_tasks(std::string suite, const std::vector<Task>& tasks, unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseSink> sinks(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i](sinks[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  RunReport report;
  report.suite = std::move(suite);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    report.cases_run += sinks[i].run();
    for (const auto& f : sinks[i].failures()) report.failures.push_back(f);
    if (!errors[i].empty()) {
      ++report.cases_run;
      report.failures.push_back({"task/" + std::to_string(i), "no exception", errors[i], false});
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Weight vectors

/// Deterministic random weights with numerators and denominators in [1, 20].
inline WeightVector random_weights(std::uint64_t seed, unsigned index, std::size_t M) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + index);
  std::vector<BigRat> t;
  t.reserve(M);
  for (std::size_t i = 0; i < M; ++i) {
    const std::uint64_t x = rng();
    t.push_back(make_rat(static_cast<long>(1 + x % 20), static_cast<long>(1 + (x >> 32) % 20)));
  }
  return WeightVector(std::move(t));
}

struct NamedWeights {
  std::string name;
  WeightVector t;
};

/// ones plus `count` seeded random vectors.
inline std::vector<NamedWeights> weight_panel(std::uint64_t seed, unsigned count, std::size_t M) {
  std::vector<NamedWeights> out{{"ones", WeightVector::ones(M)}};
  for (unsigned i = 1; i <= count; ++i) out.push_back({"rand" + std::to_string(i), random_weights(seed, i, M)});
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration sums

struct FamilySums {
  std::vector<BigRat> alpha;                 // per weight vector
  std::vector<std::vector<BigRat>> alpha_r;  // [weight][r], r = 0..m
  std::vector<BigRat> beta;
  std::vector<BigRat> off_axis;
};

inline FamilySums enumerate_sums(const PathFamily& family, const std::vector<NamedWeights>& panel) {
  FamilySums s;
  const std::size_t w = panel.size();
  s.alpha.assign(w, BigRat(0));
  s.beta.assign(w, BigRat(0));
  s.off_axis.assign(w, BigRat(0));
  s.alpha_r.assign(w, std::vector<BigRat>(family.m + 1, BigRat(0)));
  enumerate_paths(family, [&](const LatticePath& p) {
    const SegmentProfile a = u_segment_profile(p);
    const SegmentProfile b = internal_u_segment_profile(p);
    const SegmentProfile o = off_axis_u_segment_profile(p);
    for (std::size_t i = 0; i < w; ++i) {
      const BigRat wa = a.weight(panel[i].t);
      s.alpha[i] += wa;
      s.alpha_r[i][a.r()] += wa;
      s.beta[i] += b.weight(panel[i].t);
      s.off_axis[i] += o.weight(panel[i].t);
    }
  });
  return s;
}

namespace detail {

inline std::string kmj(unsigned k, unsigned m, unsigned j) {
  return "k=" + std::to_string(k) + "/m=" + std::to_string(m) + "/j=" + std::to_string(j);
}

/// (k, m, j) with k in 0..3, j = 0 when k = 0, and 2m + kj <= max_len.
inline std::vector<std::array<unsigned, 3>> kmj_grid(unsigned max_len) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned m = 0; 2 * m <= max_len; ++m) {
      for (unsigned j = 0; 2 * m + k * j <= max_len; ++j) {
        if (k == 0 && j > 0) break;
        out.push_back({k, m, j});
      }
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Task groups

/// Every u-segment and internal-segment evaluator against enumeration. The
/// published double sum for beta over Q is checked against beta (id thm5.2),
/// and additionally against the off-axis statistic it does count; the
/// corrected form is checked against beta.
inline std::vector<Task> formula_grid_tasks(unsigned max_len, std::uint64_t seed) {
  std::vector<Task> tasks;
  for (const auto& [k, m, j] : detail::kmj_grid(max_len)) {
    tasks.push_back([k = k, m = m, j = j, seed](CaseSink& out) {
      const auto panel = weight_panel(seed, 3, std::max(1U, m));
      const FamilySums P = enumerate_sums(PathFamily::p(k, m, j), panel);
      const FamilySums Q = enumerate_sums(PathFamily::q(k, m, j), panel);
      const std::string at = detail::kmj(k, m, j);
      for (std::size_t w = 0; w < panel.size(); ++w) {
        const auto& t = panel[w].t;
        const std::string tag = at + "/t=" + panel[w].name;
        out.check("thm2.2/" + tag, P.alpha[w], weighted_count_P(k, m, j, t));
        out.check("thm4.2/" + tag, Q.alpha[w], weighted_count_Q(k, m, j, t));
        if (m + j >= 1) {
          out.check("thm3.2/" + tag, P.beta[w], weighted_count_internal_P(k, m, j, t));
          out.check("thm5.2/" + tag, Q.beta[w], weighted_count_internal_Q(k, m, j, t));
          out.check("thm5.2-off-axis/" + tag, Q.off_axis[w], weighted_count_internal_Q(k, m, j, t));
          out.check("thm5.2-corrected/" + tag, Q.beta[w], weighted_count_internal_Q_corrected(k, m, j, t));
        }
        for (unsigned r = 1; r <= m; ++r) {
          const std::string rt = at + "/r=" + std::to_string(r) + "/t=" + panel[w].name;
          out.check("cor2.3/" + rt, P.alpha_r[w][r], weighted_count_P_r(k, m, j, r, t));
          out.check("cor4.3/" + rt, Q.alpha_r[w][r], weighted_count_Q_r(k, m, j, r, t));
        }
      }
    });
  }
  return tasks;
}

/// Cross-family ratio Q (m+j+1)(m+j) = P m (m+1), plus the family counts
/// extracted from the series solution.
inline std::vector<Task> ratio_tasks(unsigned max_len, std::uint64_t seed) {
  std::vector<Task> tasks;
  for (const auto& [k, m, j] : detail::kmj_grid(max_len)) {
    if (m == 0) continue;
    tasks.push_back([k = k, m = m, j = j, seed](CaseSink& out) {
      for (const auto& [name, t] : weight_panel(seed, 3, m)) {
        const BigRat q = weighted_count_Q(k, m, j, t) * BigRat((m + j + 1) * (m + j));
        const BigRat p = weighted_count_P(k, m, j, t) * BigRat(m * (m + 1));
        out.check("ratio/" + detail::kmj(k, m, j) + "/t=" + name, p, q);
      }
    });
  }
  return tasks;
}

namespace detail {

// All types (r_1..r_m) with sum i r_i = m.
inline void for_each_type(unsigned m, const std::function<void(const std::vector<unsigned>&)>& visit) {
  for (unsigned r = 1; r <= m; ++r) for_each_kappa(m, r, [&](const KappaSolution& s) { visit(s.counts); });
}

inline std::string type_name(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    s += (s.empty() ? "" : ".") + std::to_string(i + 1) + "^" + std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/// Segment-type counts for both families against enumeration.
inline std::vector<Task> type_count_tasks(unsigned max_m, unsigned max_j) {
  std::vector<Task> tasks;
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 1; m <= max_m; ++m) {
      for (unsigned j = 0; j <= max_j; ++j) {
        if (k == 0 && j > 0) break;
        tasks.push_back([k, m, j](CaseSink& out) {
          std::map<std::vector<unsigned>, BigInt> p_count;
          std::map<std::vector<unsigned>, BigInt> q_count;
          enumerate_paths(PathFamily::p(k, m, j), [&](const LatticePath& path) {
            const auto type = u_segment_profile(path).as_type(m);
            p_count[type] += 1;
            if (!path.has_horizontal_on_axis()) q_count[type] += 1;
          });
          detail::for_each_type(m, [&](const std::vector<unsigned>& type) {
            const std::string id = detail::kmj(k, m, j) + "/type=" + detail::type_name(type);
            out.check("type-p/" + id, p_count[type], type_count(Family::P, m, j, type));
            out.check("type-q/" + id, q_count[type], type_count(Family::Q, m, j, type));
          });
        });
      }
    }
  }
  return tasks;
}

/// Congruence-conditioned counts against filtered enumeration, kr + 2 ell <= max_len.
inline std::vector<Task> congruence_tasks(unsigned max_len) {
  std::vector<Task> tasks;
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned ell = 0; ell < k; ++ell) {
      for (unsigned r = 0; k * r + 2 * ell <= max_len; ++r) {
        tasks.push_back([k, ell, r](CaseSink& out) {
          const unsigned n = k * r + 2 * ell;
          const BigInt tilde = count_by_length(k, n, [&](const LatticePath& p) { return satisfies_tilde_conditions(p, k, ell); });
          const BigInt bar = count_by_length(k, n, [&](const LatticePath& p) { return satisfies_bar_conditions(p, k, ell); });
          const std::string id = "k=" + std::to_string(k) + "/ell=" + std::to_string(ell) + "/r=" + std::to_string(r);
          out.check("thm6.1/" + id, tilde, count_tilde(r, k, ell));
          out.check("thm6.2/" + id, bar, count_bar(r, k, ell));
        });
      }
    }
  }
  tasks.push_back([](CaseSink& out) {
    out.check("thm6.1/spot/motzkin4", BigInt(9), count_tilde(4, 1, 0));
    out.check("thm6.2/spot/catalan4", BigInt(14), count_bar(4, 2, 0));
  });
  return tasks;
}

/// Closed forms of the weight specializations against enumeration.
/// `unit_only` restricts to the unit-weight counts.
inline std::vector<Task> example_tasks(unsigned max_m, unsigned max_j, bool unit_only = false) {
  std::vector<Task> tasks;
  for (unsigned k = 1; k <= 2; ++k) {
    for (unsigned m = 1; m <= max_m; ++m) {
      for (unsigned j = 0; j <= max_j; ++j) {
        tasks.push_back([k, m, j, unit_only](CaseSink& out) {
          const std::string at = detail::kmj(k, m, j);
          const auto paths = collect_paths(PathFamily::p(k, m, j));
          const unsigned M = m;
          auto sum = [&](const WeightVector& t, std::optional<unsigned> r = std::nullopt) {
            BigRat s(0);
            for (const auto& p : paths) {
              const SegmentProfile a = u_segment_profile(p);
              if (!r || a.r() == *r) s += a.weight(t);
            }
            return s;
          };
          const auto w = [&](const std::string& spec) { return expand_weights(WeightSpec::parse(spec), M); };

          out.check("example/exp-unit/" + at, BigRat(example_exp_unit(m, j)), sum(w("exp:1")) * BigRat(factorial(m)));
          out.check("example/negbinom-unit/" + at, BigInt(static_cast<unsigned long>(paths.size())), example_unit_cardinality(m, j));
          if (j == m) {
            out.check("example/negbinom-diagonal/" + at, example_unit_cardinality(m, j),
                      require_integer(make_rat(binomial(2L * m, m) * binomial(3L * m, m), BigInt(m + 1))));
          }
          for (unsigned r = 1; r <= 3; ++r) {
            const std::string rs = "/r=" + std::to_string(r);
            out.check("example/multiples-unit/" + at + rs, sum(w("multiples:" + std::to_string(r) + ",1")),
                      example_multiples_unit(r, m, j));
          }
          if (unit_only) return;

          for (const char* qs : {"1", "3/2", "-2"}) {
            const BigRat q = parse_rat(qs);
            const std::string qt = "/q=" + std::string(qs);
            out.check("example/exp/" + at + qt, sum(w(std::string("exp:") + qs)), example_exp(q, m, j));
            out.check("example/exp-alt/" + at + qt, sum(w(std::string("exp:") + qs)), example_exp_alt(q, m, j));
            out.check("example/negbinom/" + at + qt, sum(w(std::string("negbinom:") + qs)), example_negbinom(q, m, j));
            for (unsigned r = 1; r <= m; ++r) {
              const std::string rs = "/r=" + std::to_string(r);
              out.check("example/exp-r/" + at + rs + qt, sum(w(std::string("exp:") + qs), r), example_exp_r(q, m, j, r));
              out.check("example/xexp-r/" + at + rs + qt, sum(w(std::string("xexp:") + qs), r), example_xexp_r(q, m, j, r));
              out.check("example/qlog-r/" + at + rs + qt, sum(w(std::string("qlog:") + qs), r), example_qlog_r(q, m, j, r));
            }
            for (unsigned r = 1; r <= 3; ++r) {
              const std::string rs = "/r=" + std::to_string(r);
              const std::string args = std::to_string(r) + "," + qs;
              out.check("example/marked/" + at + rs + qt, sum(w("marked:" + args)), example_marked(r, q, m, j));
              out.check("example/multiples/" + at + rs + qt, sum(w("multiples:" + args)), example_multiples(r, q, m, j));
            }
          }
          out.check("example/expm1/" + at, sum(w("expm1")), example_expm1(m, j));
          out.check("example/logm/" + at, sum(w("logm")), example_logm(m, j));
          for (unsigned r = 1; r <= 3; ++r) {
            out.check("example/bounded/" + at + "/r=" + std::to_string(r), sum(w("bounded:" + std::to_string(r))),
                      example_bounded(r, m, j));
          }
          for (unsigned p = 1; p <= 3; ++p) {
            for (unsigned r = 1; r <= 2; ++r) {
              out.check("example/pary/" + at + "/p=" + std::to_string(p) + "/r=" + std::to_string(r),
                        sum(w("pary:" + std::to_string(p) + "," + std::to_string(r))), example_pary(p, r, m, j));
            }
          }
        });
      }
    }
  }
  return tasks;
}

/// New Catalan expressions, 0..upto (expr2 from 1).
inline std::vector<Task> catalan_expr_tasks(unsigned upto) {
  return {[upto](CaseSink& out) {
    for (unsigned n = 0; n <= upto; ++n) {
      out.check("catalan-expr1/n=" + std::to_string(n), catalan(n), catalan_expr1(n));
      if (n >= 1) out.check("catalan-expr2/n=" + std::to_string(n), catalan(n), catalan_expr2(n));
    }
  }};
}

/// Inversion corollaries for n <= max_n, k in 1..3, and the Catalan identities
/// of the k = 2, ell = 0 case (including the Riordan values).
inline std::vector<Task> inversion_tasks(unsigned max_n) {
  std::vector<Task> tasks;
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned ell = 0; ell < k; ++ell) {
      tasks.push_back([k, ell, max_n](CaseSink& out) {
        const std::pair<InversionId, const char*> ids[] = {{InversionId::cor6_0_tilde, "cor6.0-tilde"},
                                                           {InversionId::cor6_0_bar, "cor6.0-bar"},
                                                           {InversionId::cor6_1_tilde, "cor6.1-tilde"},
                                                           {InversionId::cor6_1_bar, "cor6.1-bar"}};
        for (const auto& [id, name] : ids) {
          for (unsigned n = 0; n <= max_n; ++n) {
            const auto [lhs, rhs] = inversion_check(id, n, k, ell);
            out.check(std::string(name) + "/k=" + std::to_string(k) + "/ell=" + std::to_string(ell) + "/n=" +
                          std::to_string(n),
                      lhs, rhs);
          }
        }
      });
    }
  }
  tasks.push_back([max_n](CaseSink& out) {
    const long riordan_values[] = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213};
    for (unsigned n = 0; n <= max_n; ++n) {
      for (const auto& c : catalan_identities(n)) out.check("catalan-identity/" + c.name + "/n=" + std::to_string(n), c.lhs, c.rhs);
      if (n < std::size(riordan_values)) out.check("riordan/n=" + std::to_string(n), BigInt(riordan_values[n]), riordan(n));
    }
  });
  return tasks;
}

/// Motzkin numbers as the k = 1 family sizes and via their binomial sum.
inline std::vector<Task> sequence_tasks(unsigned max_len) {
  return {[max_len](CaseSink& out) {
    for (unsigned n = 0; n <= max_len; ++n) {
      out.check("motzkin/enumeration/n=" + std::to_string(n), count_by_length(1, n), motzkin(n));
      if (n % 2 == 0) out.check("catalan/enumeration/n=" + std::to_string(n / 2), count_by_length(0, n), catalan(n / 2));
    }
  }};
}

/// Binomial, Stirling, Bell and potential-polynomial identities, m <= max_m.
inline std::vector<Task> kernel_tasks(unsigned max_m, std::uint64_t seed) {
  std::vector<Task> tasks;
  tasks.push_back([](CaseSink& out) {
    for (long n = 1; n <= 60; ++n) {
      for (long k = 0; k <= n; ++k) {
        out.check("pascal/n=" + std::to_string(n) + "/k=" + std::to_string(k), BigInt(binomial(n - 1, k) + binomial(n - 1, k - 1)),
                  binomial(n, k));
      }
    }
  });
  tasks.push_back([max_m](CaseSink& out) {
    for (unsigned m = 0; m <= max_m; ++m) {
      std::vector<BigRat> ones(m, BigRat(1));
      std::vector<BigRat> facts;
      std::vector<BigRat> nats;
      for (unsigned i = 1; i <= m; ++i) {
        facts.emplace_back(factorial(i - 1));
        nats.emplace_back(static_cast<long>(i));
      }
      for (unsigned r = 0; r <= m; ++r) {
        const std::string id = "/m=" + std::to_string(m) + "/r=" + std::to_string(r);
        out.check("bell-stirling2" + id, BigRat(stirling2(m, r)), bell_partial(m, r, ones));
        out.check("bell-stirling1" + id, BigRat(stirling1_unsigned(m, r)), bell_partial(m, r, facts));
        const BigInt idem = r == 0 ? BigInt(m == 0 ? 1 : 0) : BigInt(binomial(m, r) * pow(BigInt(r), m - r));
        out.check("bell-idempotent" + id, BigRat(idem), bell_partial(m, r, nats));
      }
    }
  });
  tasks.push_back([max_m, seed](CaseSink& out) {
    const unsigned hom_m = std::min(max_m, 8U);
    for (unsigned m = 1; m <= hom_m; ++m) {
      const WeightVector x = random_weights(seed, 100 + m, m);
      std::vector<BigRat> xs(x.values().begin(), x.values().end());
      for (const char* qs : {"-2", "3/2", "5/7"}) {
        const BigRat q = parse_rat(qs);
        std::vector<BigRat> scaled;
        for (const auto& v : xs) scaled.push_back(q * v);
        for (unsigned r = 0; r <= m; ++r) {
          out.check("bell-homogeneity/m=" + std::to_string(m) + "/r=" + std::to_string(r) + "/q=" + qs,
                    pow(q, r) * bell_partial(m, r, xs), bell_partial(m, r, scaled));
        }
      }
    }
  });
  tasks.push_back([max_m, seed](CaseSink& out) {
    const unsigned pm = std::min(max_m, 8U);
    const WeightVector fw = random_weights(seed, 200, std::max(1U, pm));
    std::vector<BigRat> f(fw.values().begin(), fw.values().end());
    // 1 + sum f_n x^n / n!
    std::vector<BigRat> base(pm + 1, BigRat(0));
    base[0] = 1;
    for (unsigned n = 1; n <= pm; ++n) base[n] = f[n - 1] / BigRat(factorial(n));
    const UniSeries series(base);
    std::vector<std::string> lambdas;
    for (int l = -2; l <= 5; ++l) lambdas.push_back(std::to_string(l));
    lambdas.emplace_back("1/2");
    lambdas.emplace_back("3/2");
    for (const auto& ls : lambdas) {
      const BigRat lambda = parse_rat(ls);
      const UniSeries powered = rational_power(series, lambda);
      for (unsigned m = 0; m <= pm; ++m) {
        out.check("potential/m=" + std::to_string(m) + "/lambda=" + ls, powered[m] * BigRat(factorial(m)),
                  potential_poly(m, lambda, f));
      }
    }
    // Integer powers by repeated multiplication, independent of the recurrence.
    for (unsigned e = 0; e <= 5; ++e) {
      const UniSeries powered = series.pow(e);
      for (unsigned m = 0; m <= pm; ++m) {
        out.check("potential-product/m=" + std::to_string(m) + "/lambda=" + std::to_string(e),
                  powered[m] * BigRat(factorial(m)), potential_poly(m, BigRat(e), f));
      }
    }
  });
  return tasks;
}

namespace detail {

// sum_{i=1}^{n} t_i x^i P^i (times P when `extra`), with P truncated at (nx, nz).
inline TruncatedSeries weighted_power_sum(const WeightVector& t, const TruncatedSeries& p, bool extra) {
  const unsigned nx = p.nx();
  const unsigned nz = p.nz();
  TruncatedSeries acc(nx, nz);
  TruncatedSeries xp = TruncatedSeries::x(nx, nz) * p;
  TruncatedSeries power = xp;
  for (unsigned i = 1; i <= nx; ++i) {
    acc = acc + t[i] * (extra ? power * p : power);
    power = power * xp;
  }
  return acc;
}

}  // namespace detail

/// Functional-equation residuals, series counts vs enumeration, Lagrange
/// inversion, and the congruence generating functions.
inline std::vector<Task> series_tasks(unsigned nx, unsigned nz, unsigned uni_order, std::uint64_t seed) {
  std::vector<Task> tasks;
  for (unsigned v = 1; v <= 3; ++v) {
    tasks.push_back([nx, nz, v, seed](CaseSink& out) {
      const WeightVector t = random_weights(seed, v, nx + nz + 2);
      const std::string tag = "/t=rand" + std::to_string(v);
      const TruncatedSeries one = TruncatedSeries::constant(BigRat(1), nx, nz);
      const TruncatedSeries x = TruncatedSeries::x(nx, nz);
      const TruncatedSeries z = TruncatedSeries::z(nx, nz);
      const TruncatedSeries y = solve_y(t, nx, nz);
      const TruncatedSeries P = gf_family(GfFamily::P, t, nx, nz);
      const TruncatedSeries Q = gf_family(GfFamily::Q, t, nx, nz);
      const TruncatedSeries F = gf_family(GfFamily::F, t, nx, nz);
      const TruncatedSeries H = gf_family(GfFamily::H, t, nx, nz);

      const TruncatedSeries rhs21 = one + z * P + detail::weighted_power_sum(t, P, false) + z * detail::weighted_power_sum(t, P, true);
      out.check_true("residual/p-family" + tag, (P - rhs21).is_zero());
      out.check_true("residual/y" + tag, (y - (x + z * y) * y.compose_into(weight_polynomial(t, nx))).is_zero());
      out.check_true("residual/q-family" + tag, (Q * (one + z * P) - P).is_zero());
      out.check_true("residual/internal-p" + tag, (F * (one - x * P) - (one + z * P)).is_zero());
      out.check_true("residual/off-axis-q" + tag, (H * (one - y - x - z * y) - (one - y)).is_zero());

      // y* = y(x, zx) satisfies y* = x (1 + z y*) T(y*) and carries the same counts.
      const TruncatedSeries ys = solve_y(t, nx + nz + 1, nz).substitute_z_by_zx().truncated(nx, nz);
      for (unsigned m = 0; m + 1 <= nx; ++m) {
        for (unsigned j = 0; j <= nz && m + j + 1 <= nx; ++j) {
          out.check("grading/" + std::to_string(m) + "," + std::to_string(j) + tag, count_from_p(P, m, j),
                    count_from_ystar(ys, m, j));
        }
      }
    });
  }
  // Coefficients against enumeration on a small grid.
  tasks.push_back([seed](CaseSink& out) {
    const unsigned nx = 5;
    const unsigned nz = 3;
    for (unsigned v = 0; v <= 2; ++v) {
      const WeightVector t = v == 0 ? WeightVector::ones(nx + 1) : random_weights(seed, v, nx + 1);
      const std::vector<NamedWeights> panel{{"w", t}};
      const TruncatedSeries P = gf_family(GfFamily::P, t, nx, nz);
      const TruncatedSeries Q = gf_family(GfFamily::Q, t, nx, nz);
      const TruncatedSeries F = gf_family(GfFamily::F, t, nx, nz);
      const TruncatedSeries H = gf_family(GfFamily::H, t, nx, nz);
      const TruncatedSeries G = gf_family(GfFamily::QInternal, t, nx, nz);
      for (unsigned k = 1; k <= 2; ++k) {
        for (unsigned m = 0; m <= nx; ++m) {
          for (unsigned j = 0; j <= nz; ++j) {
            const FamilySums sp = enumerate_sums(PathFamily::p(k, m, j), panel);
            const FamilySums sq = enumerate_sums(PathFamily::q(k, m, j), panel);
            const std::string id = detail::kmj(k, m, j) + "/t=" + std::to_string(v);
            out.check("gf/P/" + id, sp.alpha[0], P.coeff(m, j));
            out.check("gf/Q/" + id, sq.alpha[0], Q.coeff(m, j));
            out.check("gf/F/" + id, sp.beta[0], F.coeff(m, j));
            out.check("gf/H-off-axis/" + id, sq.off_axis[0], H.coeff(m, j));
            out.check("gf/Q-internal/" + id, sq.beta[0], G.coeff(m, j));
          }
        }
      }
    }
  });
  // Lagrange inversion against series reversion, f = x / T(x).
  tasks.push_back([seed](CaseSink& out) {
    const unsigned N = 10;
    for (unsigned v = 1; v <= 3; ++v) {
      const WeightVector tw = random_weights(seed, 300 + v, 4);
      std::vector<BigRat> tc(N + 1, BigRat(0));
      tc[0] = 1;
      for (unsigned i = 1; i <= 4; ++i) tc[i] = tw[i];
      const UniSeries T(tc);
      const UniSeries x = UniSeries::x(N);
      const UniSeries f = x * T.reciprocal();
      const UniSeries g = f.reversion();
      const UniSeries g2 = g * g;
      for (unsigned n = 1; n <= N; ++n) {
        const std::string id = "/n=" + std::to_string(n) + "/T=" + std::to_string(v);
        out.check("lagrange/phi=x" + id, g[n], lagrange_coeff(x, f, n));
        out.check("lagrange/phi=x2" + id, g2[n], lagrange_coeff(x * x, f, n));
        // [x^n] g = (1/n) [x^{n-1}] T^n.
        out.check("lagrange/powers" + id, g[n], T.pow(n)[n - 1] / BigRat(n));
      }
      out.check_true("lagrange/compose/T=" + std::to_string(v), f.compose(g) == x);
    }
  });
  // Congruence generating functions.
  tasks.push_back([uni_order](CaseSink& out) {
    for (unsigned p = 1; p <= 4; ++p) {
      const UniSeries f = pary_tree_gf(p, uni_order);
      for (unsigned n = 0; n <= uni_order; ++n) {
        const BigRat closed = make_rat(binomial(static_cast<long>(p) * n, n), BigInt((p - 1) * n + 1));
        out.check("pary/p=" + std::to_string(p) + "/n=" + std::to_string(n), closed, f[n]);
      }
    }
    const unsigned gf_order = uni_order + 2;
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned ell = 0; ell < k; ++ell) {
        const std::string ke = "k=" + std::to_string(k) + "/ell=" + std::to_string(ell);
        const UniSeries gt = gf_tilde_bar(SegmentGf::tilde, k, ell, gf_order);
        const UniSeries gb = gf_tilde_bar(SegmentGf::bar, k, ell, gf_order);
        for (unsigned r = 0; r <= gf_order; ++r) {
          out.check("gf-tilde/" + ke + "/r=" + std::to_string(r), BigRat(count_tilde(r, k, ell)), gt[r]);
          out.check("gf-bar/" + ke + "/r=" + std::to_string(r), BigRat(count_bar(r, k, ell)), gb[r]);
        }
        for (SegmentGf which : {SegmentGf::tilde, SegmentGf::bar}) {
          const auto [lhs, rhs] = substitution_identity(which, k, ell, uni_order);
          out.check(std::string(which == SegmentGf::tilde ? "subst-tilde/" : "subst-bar/") + ke, lhs, rhs);
        }
      }
    }
  });
  return tasks;
}

/// Rotation bijection over all paths with 2m + kj <= max_len, k in 0..2, and
/// the h <-> ud exchange up to length max_schroder.
inline std::vector<Task> bijection_tasks(unsigned max_len, unsigned max_schroder) {
  std::vector<Task> tasks;
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned m = 0; 2 * m <= max_len; ++m) {
      for (unsigned j = 0; 2 * m + k * j <= max_len; ++j) {
        if (k == 0 && j > 0) break;
        tasks.push_back([k, m, j](CaseSink& out) {
          const std::string at = detail::kmj(k, m, j);
          std::vector<BigInt> marked_by_r(m + 1, BigInt(0));
          std::vector<BigInt> free_by_r(m + 1, BigInt(0));
          std::set<std::string> images;
          enumerate_paths(PathFamily::p(k, m, j), [&](const LatticePath& p) {
            const SegmentProfile prof = u_segment_profile(p);
            marked_by_r[prof.r()] += m + 1;
            for (unsigned mark = 0; mark <= m; ++mark) {
              const MarkedPath mp{p, mark};
              const LatticePath l = phi(mp);
              const std::string id = at + "/" + p.to_string() + "@" + std::to_string(mark);
              out.check_true("phi/free/" + id, is_free_path(l) && l.horizontals() == j && l.ups() == m, l.to_string());
              out.check("phi/roundtrip/" + id, mp, phi_inv(l));
              out.check("phi/type/" + id, prof, u_segment_profile(l));
              images.insert(l.to_string());
            }
          });
          enumerate_paths(PathFamily::free(k, m, j), [&](const LatticePath& l) {
            free_by_r[u_segment_profile(l).r()] += 1;
            out.check("phi-inv/roundtrip/" + at + "/" + l.to_string(), l, phi(phi_inv(l)));
          });
          for (unsigned r = 0; r <= m; ++r) out.check("phi/cardinality/" + at + "/r=" + std::to_string(r), marked_by_r[r], free_by_r[r]);
          out.check("phi/onto/" + at, BigInt(static_cast<unsigned long>(images.size())), count_family(PathFamily::free(k, m, j)));
        });
      }
    }
  }
  tasks.push_back([max_schroder](CaseSink& out) {
    for (unsigned len = 0; len <= max_schroder; len += 2) {
      const unsigned n = len / 2;
      const std::string ns = "/n=" + std::to_string(n);
      enumerate_paths(PathFamily::p(0, n, 0), [&](const LatticePath& d) {
        const LatticePath s = dyck_to_schroder(d);
        out.check_true("d2s/even/" + d.to_string(), s.length() == len);
        out.check("d2s/roundtrip/" + d.to_string(), d, schroder_to_dyck(s));
      });
      BigInt even(0);
      enumerate_by_length(2, len, true, false, [&](const LatticePath& s) {
        bool all_even = true;
        for (const auto& [l, c] : u_segment_profile(s).counts) all_even = all_even && l % 2 == 0;
        if (!all_even) return;
        even += 1;
        out.check("s2d/roundtrip/" + s.to_string(), s, dyck_to_schroder(schroder_to_dyck(s)));
      });
      out.check("cor6.2/even" + ns, catalan(n), even);
      const BigInt odd_first = count_by_length(2, len + 2, [](const LatticePath& p) { return satisfies_bar_conditions(p, 2, 1); });
      out.check("cor6.2/odd-first" + ns, catalan(n + 1), odd_first);
    }
  });
  return tasks;
}

// ---------------------------------------------------------------------------
// Suites

struct VerifyOptions {
  unsigned max_n = 12;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "series", "bijections", "identities"};
  return names;
}

inline std::vector<Task> suite_tasks(const std::string& suite, const VerifyOptions& o) {
  std::vector<Task> tasks;
  auto add = [&](std::vector<Task> more) {
    for (auto& t : more) tasks.push_back(std::move(t));
  };
  const unsigned n = o.max_n;
  if (suite == "formulas" || suite == "all") {
    add(formula_grid_tasks(n, o.seed));
    add(ratio_tasks(n, o.seed));
    add(type_count_tasks(std::min(n / 2, 6U), 3));
    add(congruence_tasks(n + 2));
    add(example_tasks(std::max(1U, std::min(n / 2, 5U) - 1), 2));
    add(sequence_tasks(n));
  }
  if (suite == "series" || suite == "all") {
    const unsigned order = n > 4 ? n - 2 : 2;
    add(series_tasks(order, std::max(1U, n / 2), order, o.seed));
  }
  if (suite == "bijections" || suite == "all") add(bijection_tasks(std::min(n, 10U), n + 2));
  if (suite == "identities" || suite == "all") {
    add(catalan_expr_tasks(2 * n + 1));
    add(inversion_tasks(std::min(n, 8U)));
    add(kernel_tasks(std::min(n, 10U), o.seed));
  }
  if (tasks.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return tasks;
}

inline RunReport run_suite(const std::string& suite, const VerifyOptions& o) {
  return run_tasks(suite, suite_tasks(suite, o), o.jobs);
}

}  // namespace kpaths
