#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "covlab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = covlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"split-classes"}).code, 2);
  EXPECT_EQ(run({"cover", "check", "--group", "S5"}).code, 2);
  EXPECT_EQ(run({"search", "--ambient", "S"}).code, 2);
  EXPECT_EQ(run({"search", "--ambient", "S7", "--source", "guess"}).code, 2);
  const auto bad = run({"cover", "check", "--group", "S5", "--H", "nonsense", "--K", "S4"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("unrecognized group recipe"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SplitClasses) {
  const auto r = run({"split-classes", "8", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], 1);
  std::map<std::string, bool> split;
  for (const auto& row : j["types"]) split[row["type"]] = row["split"];
  EXPECT_TRUE(split.at("[1;7]"));
  EXPECT_TRUE(split.at("[3;5]"));
  EXPECT_FALSE(split.at("[2;6]"));
  const auto text = run({"split-classes", "8"});
  EXPECT_NE(text.out.find("[3;5]"), std::string::npos);
}

TEST(Cli, CoverCheck) {
  const auto r = run({"cover", "check", "--group", "S5", "--H", "star2/S5:H", "--K", "star2/S5:K", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_EQ(j["kind"], "star2");
  for (const auto& row : j["classes"]) EXPECT_NE(row["coveredBy"], "uncovered");

  const auto neg = run({"cover", "check", "--group", "A5", "--H", "star2/A5:H", "--K", "star2/A5:H"});
  EXPECT_EQ(neg.code, 1);
  const auto star = run({"cover", "check", "--group", "S3", "--H", "3:(1 2)", "--K", "A3", "--kind", "star"});
  EXPECT_EQ(star.code, 0) << star.err;
  const auto generic = run({"cover", "check", "--group", "D10", "--H", "C5", "--K", "C5"});
  EXPECT_EQ(generic.code, 2);
}

TEST(Cli, Search) {
  const auto r = run({"search", "--ambient", "A", "--n", "7", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["coverable"].get<bool>());
  EXPECT_EQ(j["witness"]["transitivity"], "exactlyOne");
  const auto s7 = nlohmann::json::parse(run({"search", "--ambient", "S7", "--source", "catalog", "--json"}).out);
  EXPECT_FALSE(s7["coverable"].get<bool>());
  EXPECT_EQ(s7["completeness"], "assumed-catalog");
  EXPECT_FALSE(s7["certificate"].empty());
}

TEST(Cli, Fw) {
  const auto ok = run({"fw", "check", "--group", "S4", "--H", "4:(1 2 3 4);(1 3)", "--N", "V4", "--json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(j["isFw"].get<bool>());
  EXPECT_EQ(j["kernel"]["order"], 12);
  EXPECT_EQ(run({"fw", "check", "--group", "A5", "--H", "5:(1 2 3);(2 3 4)", "--N", "C1"}).code, 2);
  EXPECT_EQ(run({"fw", "check", "--group", "A5", "--H", "5:(1 2 3);(2 3 4)", "--N", "5:()"}).code, 1);
  EXPECT_EQ(run({"fw", "search", "--group", "F21"}).code, 0);
  EXPECT_EQ(run({"fw", "search", "--group", "A5"}).code, 1);
}

TEST(Cli, JsonIsByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"search", "--ambient", "S6", "--json"},
        std::vector<std::string>{"cover", "check", "--group", "A8", "--H", "star2/A8:H", "--K", "star2/A8:K", "--json"},
        std::vector<std::string>{"fw", "search", "--group", "S4", "--json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, VerifyPaper) {
  const auto r = run({"verify-paper", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["failed"].get<bool>());
  for (const auto& row : j["rows"]) {
    EXPECT_NE(row["status"], "failed") << row["claim"];
    EXPECT_FALSE(row.contains("seconds"));
  }
  EXPECT_EQ(r.out, run({"verify-paper", "--json"}).out);
}
