#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sov/algebra/poly_json.hpp"
#include "sov/characters/characters_json.hpp"
#include "sov/cli/cli.hpp"

namespace sov::cli {
namespace {

using nlohmann::ordered_json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation sov(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<ordered_json> json_lines(const std::string& text) {
  std::vector<ordered_json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(ordered_json::parse(line));
  return out;
}

TEST(CliComputeTest, Dimension) {
  const Invocation r = sov({"compute", "dim", "--L", "2", "--lambda", "1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(ordered_json::parse(r.out).at("result"), "4");
  EXPECT_EQ(sov({"compute", "dim", "--lambda", "1,1", "--format", "pretty"}).out, "5\n");
}

TEST(CliComputeTest, QAndTrivialCharacter) {
  const Invocation q = sov({"compute", "q", "--L", "1", "--lambda", "1"});
  ASSERT_EQ(q.code, 0);
  const LaurentPoly got = poly_from_json(ordered_json::parse(q.out).at("result"));
  const VarSet z{"z"};
  EXPECT_EQ(got, (LaurentPoly::variable(z, "z") + LaurentPoly::variable(z, "z", -1)) * Rational(1, 2));
  const Invocation c = sov({"compute", "chi", "--L", "2", "--lambda", "0,0"});
  EXPECT_EQ(poly_from_json(ordered_json::parse(c.out).at("result")), LaurentPoly::constant(VarSet::numbered("x", 2), 1));
}

TEST(CliComputeTest, CsvListsTerms) {
  const Invocation r = sov({"compute", "chi", "--lambda", "1", "--format", "csv"});
  EXPECT_EQ(r.out, "coeff,x1\n1,-1\n1,1\n");
}

TEST(CliExitCodeTest, UsageErrors) {
  EXPECT_EQ(sov({}).code, 2);
  EXPECT_EQ(sov({"compute", "dim", "--L", "3", "--lambda", "1,0"}).code, 2);
  EXPECT_EQ(sov({"compute", "dim", "--lambda", "0,1"}).code, 2);
  EXPECT_EQ(sov({"compute", "chi-trunc", "--lambda", "1,0"}).code, 2);
  EXPECT_EQ(sov({"compute", "nope", "--lambda", "1"}).code, 2);
  EXPECT_EQ(sov({"verify", "eigen", "--format", "xml"}).code, 2);
  EXPECT_EQ(sov({"verify", "inverse-sk", "--lambda", "1,0", "--k", "3"}).code, 2);
  EXPECT_EQ(sov({"bench", "qred-scaling", "--sizes", "9"}).code, 2);
  EXPECT_EQ(sov({"--help"}).code, 0);
}

TEST(CliExitCodeTest, FailureExitsOne) {
  // The alternative sign is wrong for L = 3, k = 1, where S_1^{-1} is the identity.
  const Invocation bad = sov({"verify", "inverse-sk", "--lambda", "0,0,0", "--k", "1", "--printed-sign"});
  EXPECT_EQ(bad.code, 1);
  const auto lines = json_lines(bad.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_FALSE(lines[0].at("pass").get<bool>());
  EXPECT_FALSE(lines[0].at("witness").is_null());
  EXPECT_EQ(lines[1].at("summary").at("failed"), 1);
  EXPECT_EQ(sov({"verify", "inverse-sk", "--lambda", "0,0,0", "--k", "1"}).code, 0);
}

TEST(CliVerifyTest, Examples) {
  const Invocation eigen = sov({"verify", "eigen", "--Lmax", "3", "--lmax", "2"});
  EXPECT_EQ(eigen.code, 0);
  const auto lines = json_lines(eigen.out);
  // 3 + 6 + 10 partitions times L values of j each.
  EXPECT_EQ(lines.back().at("summary").at("total"), 3 * 1 + 6 * 2 + 10 * 3);
  const Invocation qred = sov({"verify", "qred", "--L", "1", "--lambda", "1"});
  EXPECT_EQ(qred.code, 0);
  EXPECT_TRUE(json_lines(qred.out).front().at("pass").get<bool>());
  const Invocation all = sov({"verify", "all", "--Lmax", "2", "--lmax", "1", "--jobs", "3"});
  EXPECT_EQ(all.code, 0);
  EXPECT_TRUE(json_lines(all.out).back().at("summary").contains("seconds"));
}

TEST(CliVerifyTest, JobsDoNotChangeTheReport) {
  const Invocation one = sov({"verify", "denominator", "--Lmax", "3", "--lmax", "1", "--jobs", "1", "--format", "csv"});
  const Invocation four = sov({"verify", "denominator", "--Lmax", "3", "--lmax", "1", "--jobs", "4", "--format", "csv"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(resolve_jobs(5), 5u);
  ::setenv("SOV_JOBS", "3", 1);
  EXPECT_EQ(resolve_jobs(std::nullopt), 3u);
  ::setenv("SOV_JOBS", "x", 1);
  EXPECT_EQ(resolve_jobs(std::nullopt), 1u);
  ::unsetenv("SOV_JOBS");
}

TEST(CliBenchTest, Rows) {
  const Invocation empty = sov({"bench", "det-vs-product", "--sizes", ""});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "size,method,wall_time,term_count\n");
  const Invocation det = sov({"bench", "det-vs-product", "--sizes", "4"});
  EXPECT_EQ(det.code, 0);
  std::istringstream in(det.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].substr(0, 14), "4,determinant,");
  EXPECT_EQ(rows[2].substr(0, 10), "4,product,");
  EXPECT_EQ(rows[1].substr(rows[1].rfind(',')), rows[2].substr(rows[2].rfind(',')));
  const Invocation q = sov({"bench", "qred-scaling", "--sizes", "1,2,3"});
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(std::count(q.out.begin(), q.out.end(), '\n'), 4);
}

TEST(CliJsonTest, CanonicalEncodingsRoundTrip) {
  const Invocation r = sov({"compute", "a-mu", "--lambda", "2,1,0"});
  const std::string poly = ordered_json::parse(r.out).at("result").dump();
  EXPECT_EQ(poly_to_json(poly_from_json(ordered_json::parse(poly))).dump(), poly);
  const std::string part = partition_to_json(Partition({3, 1, 1})).dump();
  EXPECT_EQ(partition_to_json(partition_from_json(ordered_json::parse(part))).dump(), part);
  CharacterExpansion e(2);
  e.add(Partition({1, 0}), Rational(-2, 3));
  e.add(Partition({2, 2}), Rational(5));
  const std::string exp = expansion_to_json(e).dump();
  EXPECT_EQ(expansion_to_json(expansion_from_json(ordered_json::parse(exp), 2)).dump(), exp);
  // A full verify line parses back to the same bytes.
  const Invocation v = sov({"verify", "kprop", "--lambda", "1,0"});
  for (const auto& line : json_lines(v.out)) EXPECT_EQ(ordered_json::parse(line.dump()).dump(), line.dump());
}

TEST(CliOutputTest, WritesFile) {
  const std::string path = ::testing::TempDir() + "sov_cli_out.json";
  const Invocation r = sov({"compute", "dim", "--lambda", "1,0", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(ordered_json::parse(text).at("result"), "4");
}

}  // namespace
}  // namespace sov::cli
