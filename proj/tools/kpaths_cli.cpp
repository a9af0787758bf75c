#include "kpaths_cli.hpp"

#include "kpaths/kpaths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kpaths::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned require(const std::optional<unsigned>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing --") + name);
  return *v;
}

json profile_json(const SegmentProfile& p) {
  json o = json::object();
  for (const auto& [len, c] : p.counts) o[std::to_string(len)] = c;
  return o;
}

std::string profile_csv(const SegmentProfile& p) {
  std::string s;
  for (const auto& [len, c] : p.counts) s += (s.empty() ? "" : ";") + std::to_string(len) + ":" + std::to_string(c);
  return s;
}

std::string uh_csv(const UhSegments& uh) {
  std::string s = std::to_string(uh.first);
  for (unsigned c : uh.internal) s += ";" + std::to_string(c);
  return s;
}

PathFamily make_family(const std::string& family, unsigned k, unsigned m, unsigned j) {
  if (family == "p") return PathFamily::p(k, m, j);
  if (family == "q") return PathFamily::q(k, m, j);
  return PathFamily::free(k, m, j);
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  unsigned k = 0, m = 0, j = 0;
  std::string family = "p";
  std::vector<std::string> stats;
  std::string format = "json";
};

void cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const PathFamily fam = make_family(a.family, a.k, a.m, a.j);
  if (a.k == 0 && a.j > 0) throw UsageError("k = 0 requires j = 0");
  std::vector<std::string> stats = a.stats;
  if (stats.empty()) stats = {"alpha", "beta", "uh"};
  const auto want = [&](const char* s) { return std::find(stats.begin(), stats.end(), s) != stats.end(); };
  if (a.format == "csv") {
    out << "path";
    for (const auto& s : stats) out << ',' << s;
    out << '\n';
  }
  enumerate_paths(fam, [&](const LatticePath& p) {
    if (a.format == "csv") {
      out << p.to_string();
      for (const auto& s : stats) {
        out << ',';
        if (s == "alpha") out << profile_csv(u_segment_profile(p));
        if (s == "beta") out << profile_csv(internal_u_segment_profile(p));
        if (s == "uh") out << uh_csv(uh_segment_profile(p));
      }
      out << '\n';
      return;
    }
    json rec;
    rec["path"] = p.to_string();
    if (want("alpha")) rec["alpha"] = profile_json(u_segment_profile(p));
    if (want("beta")) rec["beta"] = profile_json(internal_u_segment_profile(p));
    if (want("uh")) {
      const UhSegments uh = uh_segment_profile(p);
      rec["uh"] = {{"first", uh.first}, {"internal", uh.internal}};
    }
    out << rec.dump() << '\n';
  });
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::optional<unsigned> k, m, j, length, ell;
  std::string family = "p";
  std::string filter;
};

void cmd_count(const CountArgs& a, std::ostream& out) {
  const unsigned k = require(a.k, "k");
  PathFilter filter;
  if (!a.filter.empty()) {
    const unsigned ell = a.ell.value_or(0);
    if (k == 0 || ell >= k) throw UsageError("--filter needs k >= 1 and ell < k");
    if (a.filter == "tilde") {
      filter = [k, ell](const LatticePath& p) { return satisfies_tilde_conditions(p, k, ell); };
    } else {
      filter = [k, ell](const LatticePath& p) { return satisfies_bar_conditions(p, k, ell); };
    }
  }
  json rec;
  rec["k"] = k;
  rec["family"] = a.family;
  BigInt total(0);
  if (a.length) {
    if (a.m || a.j) throw UsageError("--length excludes --m and --j");
    rec["length"] = *a.length;
    enumerate_by_length(k, *a.length, a.family != "free", a.family == "q", [&](const LatticePath& p) {
      if (!filter || filter(p)) total += 1;
    });
  } else {
    const unsigned m = require(a.m, "m");
    const unsigned j = a.j.value_or(0);
    if (k == 0 && j > 0) throw UsageError("k = 0 requires j = 0");
    rec["m"] = m;
    rec["j"] = j;
    total = count_family(make_family(a.family, k, m, j), filter);
  }
  if (!a.filter.empty()) {
    rec["filter"] = a.filter;
    rec["ell"] = a.ell.value_or(0);
  }
  rec["count"] = total.get_str();
  out << rec.dump() << '\n';
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
  std::string id;
  std::optional<unsigned> k, m, j, r, n, ell;
  std::string type;
  std::string t = "ones";
};

std::vector<unsigned> parse_type(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
  if (out.empty()) throw UsageError("--type needs r_1,r_2,...");
  return out;
}

void cmd_formula(const FormulaArgs& a, std::ostream& out) {
  const auto id = parse_formula_id(a.id);
  if (!id) throw UsageError("unknown formula id: " + a.id);
  json params = json::object();
  json rec;
  rec["id"] = a.id;
  const auto p = [&](const std::optional<unsigned>& v, const char* name) {
    const unsigned x = require(v, name);
    params[name] = x;
    return x;
  };
  const auto weights = [&](unsigned m) {
    params["t"] = a.t;
    return expand_weights(WeightSpec::parse(a.t), std::max(1U, m));
  };
  std::string value;
  std::optional<std::string> rhs;
  std::optional<std::string> corrected;
  switch (*id) {
    case FormulaId::thm2_2:
    case FormulaId::thm3_2:
    case FormulaId::thm4_2:
    case FormulaId::thm5_2: {
      const unsigned k = p(a.k, "k");
      const unsigned m = p(a.m, "m");
      const unsigned j = p(a.j, "j");
      const WeightVector t = weights(m);
      if (*id == FormulaId::thm2_2) value = to_string(weighted_count_P(k, m, j, t));
      if (*id == FormulaId::thm3_2) value = to_string(weighted_count_internal_P(k, m, j, t));
      if (*id == FormulaId::thm4_2) value = to_string(weighted_count_Q(k, m, j, t));
      if (*id == FormulaId::thm5_2) {
        value = to_string(weighted_count_internal_Q(k, m, j, t));
        corrected = to_string(weighted_count_internal_Q_corrected(k, m, j, t));
      }
      break;
    }
    case FormulaId::cor2_3:
    case FormulaId::cor4_3: {
      const unsigned k = p(a.k, "k");
      const unsigned m = p(a.m, "m");
      const unsigned j = p(a.j, "j");
      const unsigned r = p(a.r, "r");
      const WeightVector t = weights(m);
      value = to_string(*id == FormulaId::cor2_3 ? weighted_count_P_r(k, m, j, r, t) : weighted_count_Q_r(k, m, j, r, t));
      break;
    }
    case FormulaId::type_count_P:
    case FormulaId::type_count_Q: {
      const unsigned m = p(a.m, "m");
      const unsigned j = p(a.j, "j");
      if (a.type.empty()) throw UsageError("missing --type");
      params["type"] = a.type;
      const auto fam = *id == FormulaId::type_count_P ? Family::P : Family::Q;
      value = to_string(type_count(fam, m, j, parse_type(a.type)));
      break;
    }
    case FormulaId::thm6_1:
    case FormulaId::thm6_2: {
      const unsigned r = p(a.r, "r");
      const unsigned k = p(a.k, "k");
      const unsigned ell = a.ell.value_or(0);
      params["ell"] = ell;
      value = to_string(*id == FormulaId::thm6_1 ? count_tilde(r, k, ell) : count_bar(r, k, ell));
      break;
    }
    case FormulaId::cor6_0_tilde:
    case FormulaId::cor6_0_bar:
    case FormulaId::cor6_1_tilde:
    case FormulaId::cor6_1_bar: {
      const unsigned n = p(a.n, "n");
      const unsigned k = p(a.k, "k");
      const unsigned ell = a.ell.value_or(0);
      params["ell"] = ell;
      const InversionId which = *id == FormulaId::cor6_0_tilde ? InversionId::cor6_0_tilde
                                : *id == FormulaId::cor6_0_bar ? InversionId::cor6_0_bar
                                : *id == FormulaId::cor6_1_tilde ? InversionId::cor6_1_tilde
                                                                  : InversionId::cor6_1_bar;
      const auto [l, rr] = inversion_check(which, n, k, ell);
      value = to_string(l);
      rhs = to_string(rr);
      break;
    }
    case FormulaId::catalan_expr1:
      value = to_string(catalan_expr1(p(a.n, "n")));
      break;
    case FormulaId::catalan_expr2:
      value = to_string(catalan_expr2(p(a.n, "n")));
      break;
    case FormulaId::riordan_expr: {
      const unsigned n = p(a.n, "n");
      value = to_string(riordan(n));
      rhs = to_string(riordan_rhs(n));
      break;
    }
  }
  rec["params"] = params;
  rec["value"] = value;
  if (rhs) {
    rec["rhs"] = *rhs;
    rec["holds"] = *rhs == value;
  }
  if (corrected) rec["corrected"] = *corrected;
  rec["status"] = std::string(formula_status(*id));
  out << rec.dump() << '\n';
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string sequence;
  unsigned upto = 10;
  std::optional<unsigned> k, ell;
  std::string format = "json";
};

void cmd_table(const TableArgs& a, std::ostream& out) {
  std::function<BigInt(unsigned)> f;
  unsigned start = 0;
  const std::string& s = a.sequence;
  if (s == "catalan") {
    f = catalan;
  } else if (s == "motzkin") {
    f = motzkin;
  } else if (s == "riordan") {
    f = riordan;
  } else if (s == "catalan-expr1") {
    f = catalan_expr1;
  } else if (s == "catalan-expr2") {
    f = catalan_expr2;
    start = 1;
  } else if (s == "ptilde" || s == "pbar") {
    const unsigned k = require(a.k, "k");
    const unsigned ell = a.ell.value_or(0);
    if (k == 0 || ell >= k) throw UsageError("need k >= 1 and ell < k");
    if (s == "ptilde") {
      f = [k, ell](unsigned r) { return count_tilde(r, k, ell); };
    } else {
      f = [k, ell](unsigned r) { return count_bar(r, k, ell); };
    }
  } else {
    throw UsageError("unknown sequence: " + s);
  }
  if (a.format == "csv") out << "n,value\n";
  for (unsigned n = start; n <= a.upto; ++n) {
    const std::string v = f(n).get_str();
    if (a.format == "csv") {
      out << n << ',' << v << '\n';
    } else {
      out << json{{"n", n}, {"value", v}}.dump() << '\n';
    }
  }
}

// ---------------------------------------------------------------------------

struct BijectionArgs {
  std::string which;
  std::string path;
  std::optional<unsigned> mark, k;
};

void cmd_bijection(const BijectionArgs& a, std::ostream& out) {
  json rec;
  rec["map"] = a.which;
  rec["input"] = a.path;
  if (a.which == "phi") {
    const LatticePath base = LatticePath::parse(a.path, a.k.value_or(1));
    const unsigned mark = require(a.mark, "mark");
    rec["mark"] = mark;
    rec["output"] = phi(MarkedPath{base, mark}).to_string();
  } else if (a.which == "phi-inv") {
    const MarkedPath mp = phi_inv(LatticePath::parse(a.path, a.k.value_or(1)));
    rec["base"] = mp.base.to_string();
    rec["mark"] = mp.mark;
  } else if (a.which == "s2d") {
    rec["output"] = schroder_to_dyck(LatticePath::parse(a.path, 2)).to_string();
  } else if (a.which == "d2s") {
    rec["output"] = dyck_to_schroder(LatticePath::parse(a.path, 0)).to_string();
  } else {
    throw UsageError("unknown map: " + a.which);
  }
  out << rec.dump() << '\n';
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<unsigned> max_n;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  if (const char* env = std::getenv("KPATHS_MAX_N")) {
    try {
      o.max_n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("KPATHS_MAX_N is not a number");
    }
  }
  if (a.max_n) o.max_n = *a.max_n;
  o.seed = a.seed;
  o.jobs = a.jobs;
  const RunReport report = run_suite(a.suite, o);
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"id", f.id}, {"expected", f.expected}, {"actual", f.actual}});
  json rec;
  rec["suite"] = report.suite;
  rec["max_n"] = o.max_n;
  rec["seed"] = std::to_string(o.seed);
  rec["cases"] = report.cases_run;
  rec["failures"] = failures;
  out << rec.dump() << '\n';
  err << "verify " << report.suite << ": " << report.cases_run << " cases, " << report.failures.size() << " failures, "
      << std::fixed << std::setprecision(2) << report.wall_seconds << " s\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segment statistics of k-paths: enumeration, closed forms and verification", "kpaths"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List the paths of a family with their statistics");
  en->add_option("--k", ea.k)->required();
  en->add_option("--m", ea.m)->required();
  en->add_option("--j", ea.j)->required();
  en->add_option("--family", ea.family)->check(CLI::IsMember({"p", "q", "free"}));
  en->add_option("--stats", ea.stats)->delimiter(',')->check(CLI::IsMember({"alpha", "beta", "uh"}));
  en->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv"}));

  CountArgs ca;
  auto* co = app.add_subcommand("count", "Count a family, optionally filtered");
  co->add_option("--k", ca.k);
  co->add_option("--m", ca.m);
  co->add_option("--j", ca.j);
  co->add_option("--length", ca.length);
  co->add_option("--family", ca.family)->check(CLI::IsMember({"p", "q", "free"}));
  co->add_option("--filter", ca.filter)->check(CLI::IsMember({"tilde", "bar"}));
  co->add_option("--ell", ca.ell);

  FormulaArgs fa;
  auto* fo = app.add_subcommand("formula", "Evaluate a closed form");
  fo->add_option("id", fa.id)->required();
  fo->add_option("--k", fa.k);
  fo->add_option("--m", fa.m);
  fo->add_option("--j", fa.j);
  fo->add_option("--r", fa.r);
  fo->add_option("--n", fa.n);
  fo->add_option("--ell", fa.ell);
  fo->add_option("--type", fa.type, "r_1,r_2,... for type-p / type-q");
  fo->add_option("--t", fa.t, "weights, e.g. ones, exp:1, marked:2,3/2, custom:1,1/2");

  TableArgs ta;
  auto* tb = app.add_subcommand("table", "Print a sequence");
  tb->add_option("sequence", ta.sequence)->required();
  tb->add_option("--upto", ta.upto);
  tb->add_option("--k", ta.k);
  tb->add_option("--ell", ta.ell);
  tb->add_option("--format", ta.format)->check(CLI::IsMember({"json", "csv"}));

  BijectionArgs ba;
  auto* bi = app.add_subcommand("bijection", "Apply phi, phi-inv, s2d or d2s");
  bi->add_option("map", ba.which)->required()->check(CLI::IsMember({"phi", "phi-inv", "s2d", "d2s"}));
  bi->add_option("--path", ba.path)->required();
  bi->add_option("--mark", ba.mark);
  bi->add_option("--k", ba.k);

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run the verification suites");
  ve->add_option("--suite", va.suite)->check(CLI::IsMember({"all", "formulas", "series", "bijections", "identities"}));
  ve->add_option("--max-n", va.max_n);
  ve->add_option("--seed", va.seed);
  ve->add_option("--jobs", va.jobs)->check(CLI::Range(1U, 256U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kpaths: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*en) cmd_enumerate(ea, out);
    if (*co) cmd_count(ca, out);
    if (*fo) cmd_formula(fa, out);
    if (*tb) cmd_table(ta, out);
    if (*bi) cmd_bijection(ba, out);
    if (*ve) return cmd_verify(va, out, err);
  } catch (const UsageError& e) {
    err << "kpaths: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "kpaths: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "kpaths: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace kpaths::cli
