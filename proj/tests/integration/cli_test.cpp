#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "compare.hpp"

namespace kmroot::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

TEST(Mult, Examples) {
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "1,1,1", "--method", "peterson"}).out, "1\n");
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,1,0", "--method", "quotient"}).out, "0\n");
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,2,2", "--method", "formula", "--variant", "guarded"}).out,
            "3\n");
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,2,2", "--method", "formula", "--variant", "section44"}).out,
            "1\n");
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,2,2", "--method", "tuples"}).out, "3\n");
}

TEST(Mult, ExitCodes) {
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "1,1"}).status, kUsage);
  EXPECT_EQ(run_cli({"mult", "--weight", "1,1,1"}).status, kUsage);
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "1,1,1", "--method", "magic"}).status, kUsage);
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,2,2", "--method", "formula", "--variant", "x"}).status,
            kUsage);
  const auto formula_range = run_cli({"mult", "--gcm", "1,2", "--weight", "1,2,2", "--method", "formula"});
  EXPECT_EQ(formula_range.status, kUsage);
  EXPECT_NE(formula_range.err.find("oracle"), std::string::npos);

  const auto cap = run_cli({"mult", "--gcm", "1,2", "--weight", "4,4,4", "--method", "quotient"});
  EXPECT_EQ(cap.status, kComputation);
  EXPECT_NE(cap.err.find("oracle scale exceeded"), std::string::npos);
  EXPECT_EQ(run_cli({"mult", "--gcm", "1,2", "--weight", "2,2,2", "--method", "quotient", "--height-cap", "5"}).status,
            kComputation);
  EXPECT_EQ(run_cli({"frobnicate"}).status, kUsage);
  EXPECT_EQ(run_cli({}).status, kUsage);
  EXPECT_EQ(run_cli({"--help"}).status, kOk);
}

TEST(Mult, OutsideHypothesisNote) {
  const auto r = run_cli({"mult", "--gcm", "1,1", "--weight", "1,1,1"});
  EXPECT_EQ(r.out, "1\n");
  EXPECT_NE(r.err.find("outside paper hypothesis"), std::string::npos);
}

TEST(Rewrite, Examples) {
  EXPECT_EQ(run_cli({"rewrite", "[[e1,e2],e3]"}).out, "-1*[3,1,2]\n");
  EXPECT_EQ(run_cli({"rewrite", "e1"}).out, "+1*[1]\n");
  EXPECT_EQ(run_cli({"rewrite", "[[e1,e2],[e3,e2]]", "--verify"}).out, "+1*[1,2,3,2] -1*[2,1,3,2]\nVERIFIED\n");
  EXPECT_EQ(run_cli({"rewrite", "[ [e1, e2] , e3 ]"}).out, "-1*[3,1,2]\n");
}

TEST(Rewrite, ParseErrorsReportPosition) {
  const auto r = run_cli({"rewrite", "[e1;e2]"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_NE(r.err.find("position 3"), std::string::npos);
  EXPECT_EQ(run_cli({"rewrite", "[e0,e1]", "--verify"}).status, kUsage);
}

TEST(Witt, Examples) {
  EXPECT_EQ(run_cli({"witt", "--weight", "2,2,2"}).out, "14\n");
  EXPECT_EQ(run_cli({"witt", "--weight", "1,1,1"}).out, "2\n");
  EXPECT_EQ(run_cli({"witt", "--weight", "2,1"}).out, "1\n");
}

TEST(Compare, GridCardinalityAndHeader) {
  const auto r = run_cli({"compare", "--gcm", "1,2", "--range", "2..3"});
  ASSERT_EQ(r.status, kOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0],
            "a1,a2,n1,n2,n3,formula_section44,formula_lemma410,formula_guarded,tuples_canonical,peterson,quotient,"
            "agree_guarded_peterson");
  EXPECT_EQ(l[1].substr(0, 10), "1,2,2,2,2,");
  EXPECT_EQ(l[2].substr(0, 10), "1,2,2,2,3,");
  EXPECT_EQ(l[8].substr(0, 10), "1,2,3,3,3,");
}

TEST(Compare, JsonRowHasEqualOracles) {
  const auto r = run_cli({"compare", "--gcm", "2,2", "--range", "2..2", "--format", "json"});
  ASSERT_EQ(r.status, kOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 1u);
  const auto j = nlohmann::json::parse(l[0]);
  EXPECT_EQ(j["quotient"], j["peterson"]);
  EXPECT_TRUE(j["agree_guarded_peterson"].is_boolean());
}

TEST(Compare, FiniteTypeNonRoot) {
  const auto r = run_cli({"compare", "--gcm", "1,1", "--range", "2..2"});
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(lines(r.out).at(1).substr(0, 10), "1,1,2,2,2,");
  EXPECT_NE(lines(r.out).at(1).find(",0,0,"), std::string::npos);
  EXPECT_NE(r.err.find("outside paper hypothesis"), std::string::npos);
}

TEST(Compare, MissingAndSkippedCells) {
  const auto r = run_cli({"compare", "--gcm", "1,2", "--range", "1..4", "--height-cap", "6"});
  ASSERT_EQ(r.status, kOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 65u);
  EXPECT_EQ(l[1], "1,2,1,1,1,n/a,n/a,n/a,n/a,1,1,n/a");
  EXPECT_EQ(l.back(), "1,2,4,4,4,296,326,416,290,1,skipped,false");
  // Zero weight is excluded and every row has a Peterson value.
  for (std::size_t k = 1; k < l.size(); ++k) EXPECT_EQ(std::count(l[k].begin(), l[k].end(), ','), 11);
}

TEST(Compare, CsvAndJsonCarryIdenticalValues) {
  const auto csv = lines(run_cli({"compare", "--gcm", "2,2", "--range", "2..3"}).out);
  const auto json = lines(run_cli({"compare", "--gcm", "2,2", "--range", "2..3", "--format", "json"}).out);
  ASSERT_EQ(csv.size(), json.size() + 1);
  std::vector<std::string> keys;
  {
    std::stringstream ss(csv[0]);
    for (std::string k; std::getline(ss, k, ',');) keys.push_back(k);
  }
  for (std::size_t r = 0; r < json.size(); ++r) {
    const auto j = nlohmann::json::parse(json[r]);
    std::stringstream ss(csv[r + 1]);
    std::size_t k = 0;
    for (std::string cell; std::getline(ss, cell, ','); ++k) {
      const auto& v = j.at(keys[k]);
      const std::string as_text = v.is_string() ? v.get<std::string>() : v.dump();
      EXPECT_EQ(as_text, cell) << keys[k];
    }
  }
}

TEST(Compare, DeterministicAcrossRunsAndJobCounts) {
  const auto a = run_cli({"compare", "--gcm", "1,2", "--range", "2..4", "--jobs", "1"});
  const auto b = run_cli({"compare", "--gcm", "1,2", "--range", "2..4", "--jobs", "4"});
  const auto c = run_cli({"compare", "--gcm", "1,2", "--range", "2..4", "--jobs", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
}

TEST(Compare, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "kmroot_cli_test_report.csv";
  const auto r = run_cli({"compare", "--gcm", "1,2", "--range", "2..2", "--out", path.string()});
  ASSERT_EQ(r.status, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(lines(content.str()).size(), 2u);
  std::filesystem::remove(path);
}

TEST(Compare, BadRange) {
  EXPECT_EQ(run_cli({"compare", "--gcm", "1,2", "--range", "3..2"}).status, kUsage);
  EXPECT_EQ(run_cli({"compare", "--gcm", "1,2", "--range", "2-3"}).status, kUsage);
  EXPECT_EQ(run_cli({"compare", "--gcm", "1,2", "--format", "xml"}).status, kUsage);
}

TEST(CompareRow, FormattingOfMissingValues) {
  ComparisonRow r;
  r.a1 = 1;
  r.a2 = 2;
  r.n1 = 1;
  r.n2 = 1;
  r.n3 = 1;
  r.peterson = 1;
  EXPECT_EQ(csv_line(r), "1,2,1,1,1,n/a,n/a,n/a,n/a,1,skipped,n/a");
  EXPECT_EQ(json_line(r),
            R"({"a1":1,"a2":2,"n1":1,"n2":1,"n3":1,"formula_section44":"n/a","formula_lemma410":"n/a",)"
            R"("formula_guarded":"n/a","tuples_canonical":"n/a","peterson":1,"quotient":"skipped",)"
            R"("agree_guarded_peterson":"n/a"})");
  r.quotient = 2;
  EXPECT_TRUE(oracles_disagree(r));
}

}  // namespace
}  // namespace kmroot::cli
