#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#ifndef TORI_CLI_PATH
#error "TORI_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + TORI_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return {-1, {}};
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), p))
    r.out.append(buf.data(), k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);)
    if (!l.empty())
      out.push_back(l);
  return out;
}

} // namespace

TEST(Cli, ClassifySymplecticExample) {
  auto r = run("classify --family C --n 3 --q 2 --class '(1)(2)'");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "Degenerate");
  EXPECT_EQ(j["clauses"], nlohmann::json({"Sp-b", "Sp-c"}));
}

TEST(Cli, ExceptionalCensusTotal) {
  auto r = run("census --exceptional --all");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total degenerate classes: 130"), std::string::npos);
}

TEST(Cli, VerifySL3Of2) {
  auto r = run("verify --family A --n 3 --q 2 --budget 1000000");
  ASSERT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  for (auto& l : ls)
    EXPECT_TRUE(nlohmann::json::parse(l)["consistent"].get<bool>()) << l;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("classify --family C --n 3 --q 2 --class '(1)(x)'").code, 2);
  EXPECT_EQ(run("classify --family C --n 3 --q 6 --class '(1)(2)'").code, 2);
  EXPECT_EQ(run("classify --family A --n 1 --q 2 --class '(1)'").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("verify --family C --n 2 --q 3 --brute-force", "TORI_BUDGET=100").code, 3);
  EXPECT_EQ(run("verify --family C --n 2 --q 3 --brute-force --budget 100").code, 3);
}

TEST(Cli, ClassesRoundTripThroughClassify) {
  for (std::string fam : {"A --n 4 --q 2", "C --n 3 --q 3", "D --n 4 --q 2", "2D --n 4 --q 3", "2A --n 4 --q 2"}) {
    auto r = run("classes --family " + fam);
    ASSERT_EQ(r.code, 0);
    for (auto& d : nlohmann::json::parse(r.out)) {
      auto c = run("classify --family " + fam + " --class '" + d["class"].get<std::string>() + "'");
      EXPECT_EQ(c.code, 0) << fam << " " << d["class"];
      EXPECT_EQ(nlohmann::json::parse(c.out)["descriptor"]["class"], d["class"]);
    }
  }
}

TEST(Cli, CensusCsvAndJsonAgree) {
  auto js = run("census --family D --n-range 4:5 --qs 2,3 --format json");
  auto cs = run("census --family D --n-range 4:5 --qs 2,3 --format csv");
  ASSERT_EQ(js.code, 0);
  ASSERT_EQ(cs.code, 0);
  auto j = nlohmann::json::parse(js.out);
  auto rows = lines(cs.out);
  EXPECT_EQ(rows[0], "family,n,q,class,status,clauses,torus_order,algebraic_normaliser_order");
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    auto& row = j["rows"][i];
    std::string expect = row["descriptor"]["family"].get<std::string>() + "," +
                         std::to_string(row["descriptor"]["n"].get<int>()) + "," +
                         std::to_string(row["descriptor"]["q"].get<int>()) + "," +
                         row["descriptor"]["class"].get<std::string>() + "," + row["status"].get<std::string>() + ",";
    EXPECT_EQ(rows[i + 1].rfind(expect, 0), 0u) << rows[i + 1];
    degenerate += row["status"] == "Degenerate";
  }
  EXPECT_EQ(degenerate, j["total_degenerate"].get<std::size_t>());
  EXPECT_EQ(j["rows"].size(), j["total_classes"].get<std::size_t>());
  EXPECT_NE(cs.out.find("total degenerate classes: " + std::to_string(degenerate)), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  auto a = run("census --family C --n-range 2:4 --qs 2:5 --format json");
  auto b = run("census --family C --n-range 2:4 --qs 2:5 --format json");
  EXPECT_EQ(a.out, b.out);
}
