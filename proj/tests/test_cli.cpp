#include "kpaths_cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = kpaths::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, EnumerateRecords) {
  const CliResult r = run({"enumerate", "--k", "1", "--m", "1", "--j", "1", "--family", "p", "--stats", "alpha"});
  EXPECT_EQ(r.code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 3U);
  EXPECT_EQ(recs[0]["path"], "uhd");
  EXPECT_EQ(recs[0]["alpha"]["1"], 1);
  EXPECT_FALSE(recs[0].contains("beta"));
}

TEST(Cli, EnumerateEmptyPath) {
  const CliResult r = run({"enumerate", "--k", "0", "--m", "0", "--j", "0"});
  EXPECT_EQ(r.code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 1U);
  EXPECT_EQ(recs[0]["path"], "");
}

TEST(Cli, EnumerateForbiddenCombination) {
  const CliResult r = run({"enumerate", "--k", "0", "--m", "1", "--j", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EnumerateCsv) {
  const CliResult r = run({"enumerate", "--k", "0", "--m", "2", "--j", "0", "--format", "csv", "--stats", "alpha,beta"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "path,alpha,beta\nuudd,2:1,\nudud,1:2,1:1\n");
}

TEST(Cli, FormulaValues) {
  EXPECT_EQ(lines(run({"formula", "thm6.2", "--r", "4", "--k", "2", "--ell", "0"}).out)[0]["value"], "14");
  EXPECT_EQ(lines(run({"formula", "catalan-expr1", "--n", "3"}).out)[0]["value"], "5");
  const auto rec = lines(run({"formula", "thm2.2", "--k", "1", "--m", "1", "--j", "1", "--t", "ones"}).out)[0];
  EXPECT_EQ(rec["value"], "3");
  EXPECT_EQ(rec["status"], "ok");
  EXPECT_EQ(rec["params"]["k"], 1);
}

TEST(Cli, FormulaRationalWeights) {
  const auto rec = lines(run({"formula", "thm2.2", "--k", "1", "--m", "2", "--j", "0", "--t", "exp:1"}).out)[0];
  EXPECT_EQ(rec["value"], "3/2");
}

TEST(Cli, FormulaInternalQReportsBoth) {
  const auto rec = lines(run({"formula", "thm5.2", "--k", "0", "--m", "2", "--j", "0", "--t", "custom:3"}).out)[0];
  EXPECT_EQ(rec["value"], "2");
  EXPECT_EQ(rec["corrected"], "4");
  EXPECT_EQ(rec["status"], "paper-erratum");
}

TEST(Cli, FormulaTypeCount) {
  const auto rec = lines(run({"formula", "type-p", "--m", "3", "--j", "0", "--type", "1,1,0"}).out)[0];
  EXPECT_EQ(rec["value"], "3");
}

TEST(Cli, FormulaErrors) {
  EXPECT_EQ(run({"formula", "thm9.9"}).code, 2);
  EXPECT_EQ(run({"formula", "thm2.2", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"formula", "thm2.2", "--k", "0", "--m", "1", "--j", "1"}).code, 2);
  EXPECT_EQ(run({"formula", "thm6.2", "--r", "1", "--k", "2", "--ell", "2"}).code, 2);
  EXPECT_EQ(run({"formula", "thm2.2", "--k", "1", "--m", "1", "--j", "0", "--t", "bogus"}).code, 2);
}

TEST(Cli, Tables) {
  EXPECT_EQ(run({"table", "motzkin", "--upto", "5", "--format", "csv"}).out, "n,value\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n");
  EXPECT_EQ(run({"table", "pbar", "--k", "2", "--ell", "0", "--upto", "4", "--format", "csv"}).out,
            "n,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");
  const auto rows = lines(run({"table", "riordan", "--upto", "4"}).out);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows[4]["value"], "3");
  EXPECT_EQ(run({"table", "fibonacci"}).code, 2);
}

TEST(Cli, Bijections) {
  EXPECT_EQ(lines(run({"bijection", "phi", "--path", "ud", "--mark", "0"}).out)[0]["output"], "du");
  const auto inv = lines(run({"bijection", "phi-inv", "--path", "hdu"}).out)[0];
  EXPECT_EQ(inv["base"], "udh");
  EXPECT_EQ(inv["mark"], 0);
  EXPECT_EQ(lines(run({"bijection", "s2d", "--path", "uuhdd"}).out)[0]["output"], "uuuddd");
  EXPECT_EQ(lines(run({"bijection", "d2s", "--path", "uuuddd"}).out)[0]["output"], "uuhdd");
  EXPECT_EQ(run({"bijection", "s2d", "--path", "ud"}).code, 2);
  EXPECT_EQ(run({"bijection", "phi", "--path", "ud"}).code, 2);
}

TEST(Cli, Count) {
  EXPECT_EQ(lines(run({"count", "--k", "0", "--m", "4"}).out)[0]["count"], "14");
  EXPECT_EQ(lines(run({"count", "--k", "2", "--length", "4"}).out)[0]["count"], "6");
  EXPECT_EQ(lines(run({"count", "--k", "1", "--length", "4", "--filter", "tilde"}).out)[0]["count"], "9");
}

TEST(Cli, VerifyExitCodes) {
  const CliResult ok = run({"verify", "--suite", "bijections", "--max-n", "8"});
  EXPECT_EQ(ok.code, 0);
  const auto rec = lines(ok.out)[0];
  EXPECT_TRUE(rec["failures"].empty());
  EXPECT_GT(rec["cases"].get<long>(), 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "formulas", "--max-n", "6"}).code, 1);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliResult a = run({"verify", "--suite", "formulas", "--max-n", "8", "--seed", "42"});
  const CliResult b = run({"verify", "--suite", "formulas", "--max-n", "8", "--seed", "42", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--k", "x", "--m", "1", "--j", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
