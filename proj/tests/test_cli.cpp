#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using daha::cli::run_cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "daha-verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, A1RelationsJson) {
  const Result r = invoke({"verify", "--family", "A", "--rank", "1", "--twist", "untwisted",
                           "--suites", "relations", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto reports = lines(r.out);
  ASSERT_EQ(reports.size(), 1u);
  const auto& j = reports[0];
  EXPECT_EQ(j["suite"], "relations");
  EXPECT_EQ(j["spec"]["family"], "A");
  EXPECT_EQ(j["spec"]["rank"], 1);
  EXPECT_EQ(j["seed"], 0);
  EXPECT_TRUE(j.contains("timing_ms"));
  ASSERT_FALSE(j["cases"].empty());
  for (const auto& c : j["cases"]) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.contains("relation"));
    EXPECT_TRUE(c.contains("params"));
    EXPECT_NE(c["status"], "fail") << c.dump();
  }
}

TEST(Cli, G2TwistedOmegaIsVacuous) {
  const Result r = invoke({"verify", "--family", "G", "--rank", "2", "--twist", "twisted",
                           "--suites", "omega", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto reports = lines(r.out);
  std::size_t vacuous = 0;
  for (const auto& c : reports.at(0)["cases"]) vacuous += c["status"] == "vacuous";
  EXPECT_GT(vacuous, 0u);
}

TEST(Cli, B2TriangularityLengthFour) {
  const Result r = invoke({"verify", "--family", "B", "--rank", "2", "--suites", "triangularity",
                           "--max-length", "4", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto reports = lines(r.out);
  std::size_t triangular = 0;
  for (const auto& c : reports.at(0)["cases"])
    if (c["relation"] == "triangularity") {
      ++triangular;
      EXPECT_TRUE(c["params"].contains("support_in_ideal")) << c.dump();
    }
  EXPECT_GT(triangular, 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--family", "A"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "Q", "--rank", "1"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "E", "--rank", "3"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "A", "--rank", "1", "--suites", "nope"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "A", "--rank", "1", "--level", "0"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "A", "--rank", "1", "--max-length", "-1"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--family", "A", "--rank", "1", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({}).status, 2);
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"verify", "--family", "C", "--rank", "2", "--twist",
                                      "twisted", "--suites", "relations,omega", "--format",
                                      "json", "--specialize", "--seed", "7"};
  const Result a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.status, 0) << a.err;
  auto ja = lines(a.out), jb = lines(b.out);
  ASSERT_EQ(ja.size(), 4u);
  ASSERT_EQ(ja.size(), jb.size());
  for (std::size_t i = 0; i < ja.size(); ++i) {
    EXPECT_EQ(ja[i]["seed"], 7);
    ja[i].erase("timing_ms");
    jb[i].erase("timing_ms");
    EXPECT_EQ(ja[i].dump(), jb[i].dump());
  }
  EXPECT_EQ(ja[1]["suite"], "relations@specialized");
}

TEST(Cli, TextAndJsonAgree) {
  const std::vector<std::string> base{"verify", "--family", "A", "--rank", "2", "--suites",
                                      "omega,polynomial", "--box", "1"};
  auto text_args = base, json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const Result t = invoke(text_args), j = invoke(json_args);
  ASSERT_EQ(t.status, 0) << t.err;
  ASSERT_EQ(j.status, 0) << j.err;
  std::vector<std::string> json_ids, text_ids;
  for (const auto& rep : lines(j.out))
    for (const auto& c : rep["cases"])
      json_ids.push_back("[" + c["status"].get<std::string>() + "] " + c["id"].get<std::string>());
  std::istringstream in(t.out);
  for (std::string line; std::getline(in, line);) {
    const auto start = line.find_first_not_of(' ');
    if (start == std::string::npos || line[start] != '[') continue;
    text_ids.push_back(line.substr(start));
  }
  ASSERT_EQ(text_ids.size(), json_ids.size());
  for (std::size_t i = 0; i < json_ids.size(); ++i)
    EXPECT_EQ(text_ids[i].rfind(json_ids[i], 0), 0u) << text_ids[i] << " vs " << json_ids[i];
  EXPECT_FALSE(json_ids.empty());
}

TEST(Cli, Info) {
  const Result r = invoke({"info", "--family", "C", "--rank", "2", "--twist", "twisted"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("Omega"), std::string::npos) << r.out;
}
