#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "genuskit/io.hpp"
#include "genuskit_cli/cli.hpp"
#include "genuskit_cli/table.hpp"

using namespace genuskit;
using genuskit::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(Json::parse(line));
  return rows;
}

std::vector<std::string> column(const std::string& text, const std::string& key) {
  std::vector<std::string> out;
  for (const Json& row : json_lines(text)) out.push_back(row.at(key).get<std::string>());
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("genuskit_cli_" + name);
}

}  // namespace

TEST(CliGenus, CpValues) {
  CliRun r = run({"--format", "json", "genus", "cp", "--series", "l", "--max-n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "value"), (std::vector<std::string>{"0", "1", "0", "1", "0", "1"}));

  r = run({"genus", "cp", "--series", "ahat", "--max-n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "value"), (std::vector<std::string>{"0", "-1/8", "0", "3/128"}));

  r = run({"--format", "json", "genus", "cp", "--series", "trivial", "--max-n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "value"), (std::vector<std::string>{"0", "0", "0"}));
}

TEST(CliGenus, BallValues) {
  CliRun r = run({"--format", "json", "genus", "ball", "--series", "trivial", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "value"), std::vector<std::string>{"0"});

  r = run({"--format", "json", "genus", "ball", "--series", "l", "--n", "2", "--rho", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json row = json_lines(r.out).at(0);
  EXPECT_EQ(row.at("power_form"), "2/3");
  EXPECT_EQ(row.at("log_form"), "2/3");
  EXPECT_EQ(row.at("value"), "1/6");

  r = run({"--format", "json", "genus", "ball", "--series", "ahat", "--n", "2", "--rho", "symbolic"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "value"), std::vector<std::string>{"-1/12 * rho^2"});
}

TEST(CliGenus, SeriesFileMatchesNamedSeries) {
  const auto path = temp_path("l.txt");
  {
    std::ofstream f(path);
    f << "# z / tanh z\n" << format_series_text(l_genus_series(8));
  }
  const CliRun a = run({"--format", "json", "genus", "cp", "--series-file", path.string(), "--max-n", "8"});
  const CliRun b = run({"--format", "json", "genus", "cp", "--series", "l", "--max-n", "8"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);

  const CliRun short_file = run({"genus", "cp", "--series-file", path.string(), "--max-n", "9"});
  EXPECT_EQ(short_file.code, 1);
  EXPECT_NE(short_file.err.find("order"), std::string::npos);

  {
    std::ofstream f(path);
    f << "series z 2\n1 0 x/3\n";
  }
  EXPECT_EQ(run({"genus", "cp", "--series-file", path.string(), "--max-n", "2"}).code, 1);
  std::filesystem::remove(path);
}

TEST(CliGenus, PontryaginRowsRoundTrip) {
  const CliRun r = run({"--format", "json", "genus", "pontryagin", "--series", "l", "--weight", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  WeightedPolynomial<Rational> rebuilt(16);
  for (const Json& row : json_lines(r.out)) {
    const Exponents e = row.at("exponents").get<Exponents>();
    EXPECT_EQ(row.at("weight").get<int>(), rebuilt.weight(e));
    rebuilt.add_term(e, Rational::parse(row.at("coeff").get<std::string>()));
  }
  EXPECT_EQ(rebuilt, expand_in_pontryagin(Genus(l_genus_series(8)), 16));

  const CliRun q = run({"--format", "json", "genus", "pontryagin", "--series", "p", "--k", "1", "--weight", "8"});
  ASSERT_EQ(q.code, 0) << q.err;
  const auto rows = json_lines(q.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].at("monomial"), "p1");
  EXPECT_EQ(rows[0].at("coeff"), "1");

  EXPECT_EQ(run({"genus", "pontryagin", "--series", "l", "--k", "1", "--weight", "8"}).code, 1);
  EXPECT_EQ(run({"genus", "pontryagin", "--series", "l", "--weight", "6"}).code, 1);
}

TEST(CliEta, SignatureSymbolic) {
  const CliRun r = run({"--format", "json", "eta", "--operator", "signature", "--order", "6", "--rho", "symbolic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto eta = column(r.out, "eta");
  ASSERT_EQ(eta.size(), 6u);
  EXPECT_EQ(eta[0], "0");
  EXPECT_EQ(eta[1], "2/3 * rho^2");
  EXPECT_EQ(eta[2], "0");

  const CliRun n = run({"--format", "json", "eta", "--operator", "signature", "--order", "2", "--rho", "1/2"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(column(n.out, "eta"), (std::vector<std::string>{"0", "1/6"}));
}

TEST(CliHabel, AgreesAndIsWorkerIndependent) {
  const CliRun one = run({"--format", "json", "--workers", "1", "habel-verify", "--max-n", "16"});
  const CliRun four = run({"--format", "json", "--workers", "4", "habel-verify", "--max-n", "16"});
  ASSERT_EQ(one.code, 0) << one.err;
  ASSERT_EQ(four.code, 0);
  EXPECT_EQ(one.out, four.out);
  const auto rows = json_lines(one.out);
  ASSERT_EQ(rows.size(), 16u);
  for (const Json& row : rows) {
    EXPECT_TRUE(row.at("agree").get<bool>());
    EXPECT_EQ(row.at("habel"), row.at("ratio"));
  }
  // Rows carry exactly the documented habel schema.
  const HabelReport rep = verify_habel(16);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(Json::parse(rows[i].dump()), to_json(rep.entries[i]));
}

TEST(CliCheck, SuitesPassAndAreDeterministic) {
  const CliRun r = run({"check", "mult-identity", "--trials", "25", "--order", "40"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("25/25 passed"), std::string::npos);

  for (const char* suite : {"etf-ode", "null-reduction", "ch-exterior", "ch-symmetric", "cp-roundtrip"}) {
    const CliRun a = run({"--format", "json", "--workers", "1", "check", suite, "--trials", "3"});
    const CliRun b = run({"--format", "json", "--workers", "3", "check", suite, "--trials", "3"});
    EXPECT_EQ(a.code, 0) << suite << a.err;
    EXPECT_EQ(a.out, b.out) << suite;
  }

  const CliRun small = run({"check", "comp-inverse", "--trials", "4", "--order", "20", "--seed", "7"});
  EXPECT_EQ(small.code, 0) << small.out;
  const CliRun rho = run({"check", "null-reduction", "--trials", "2", "--rho", "3/7", "--max-n", "5", "--order", "8"});
  EXPECT_EQ(rho.code, 0) << rho.out;
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"genus", "cp", "--series", "nope", "--max-n", "3"}).code, 1);
  EXPECT_EQ(run({"genus", "cp", "--max-n", "3"}).code, 1);
  EXPECT_EQ(run({"genus", "cp", "--series", "l", "--max-n", "0"}).code, 1);
  EXPECT_EQ(run({"genus", "ball", "--series", "l", "--rho", "abc"}).code, 1);
  EXPECT_EQ(run({"eta", "--operator", "laplace", "--order", "4"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "habel-verify"}).code, 1);
  EXPECT_EQ(run({"check", "no-such-suite"}).code, 1);
  EXPECT_EQ(run({"check", "null-reduction", "--order", "5"}).code, 1);
  EXPECT_EQ(run({"check", "etf-ode", "--degree", "0"}).code, 1);
  EXPECT_EQ(run({"--out", "/nonexistent-dir/x", "habel-verify", "--max-n", "2"}).code, 1);

  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("habel-verify"), std::string::npos);
}

TEST(CliOutput, FormatsAndOutFile) {
  const CliRun csv = run({"--format", "csv", "--approx", "genus", "cp", "--series", "ahat", "--max-n", "2"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "n,value,approx\n1,0,0\n2,-1/8,-0.125\n");

  const CliRun pretty = run({"genus", "cp", "--series", "l", "--max-n", "2"});
  EXPECT_EQ(pretty.out, "n  value\n1  0\n2  1\n");

  const auto path = temp_path("out.jsonl");
  const CliRun file = run({"--format", "json", "--out", path.string(), "genus", "cp", "--series", "l", "--max-n", "2"});
  ASSERT_EQ(file.code, 0);
  EXPECT_TRUE(file.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "{\"n\":1,\"value\":\"0\"}\n{\"n\":2,\"value\":\"1\"}\n");
  std::filesystem::remove(path);
}

TEST(CliOutput, CsvQuotesSeparators) {
  cli::Table t({"a", "b"});
  t.add_row({"x,y", nlohmann::ordered_json::array({1, 2})});
  t.add_row({"say \"hi\"", true});
  std::ostringstream out;
  t.render(out, cli::Format::csv);
  EXPECT_EQ(out.str(), "a,b\n\"x,y\",\"[1,2]\"\n\"say \"\"hi\"\"\",true\n");
  EXPECT_THROW(t.add_row({"only one"}), InternalConsistencyError);
}
