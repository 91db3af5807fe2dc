#include "cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(ASERIES_BIN) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::ordered_json> lines_as_json(const std::string& text) {
  std::vector<nlohmann::ordered_json> v;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) v.push_back(nlohmann::ordered_json::parse(line));
  return v;
}

}  // namespace

TEST(Cli, VerifyTheoremGridPasses) {
  Invocation r = run("verify --family thm4.2 --n-range 0..4 --x 0.25 --x 0.5 --digits 30");
  EXPECT_EQ(r.code, 0);
  auto recs = lines_as_json(r.out);
  ASSERT_EQ(recs.size(), 10u);
  const char* fields[] = {"family", "p",   "n",         "x",         "digits", "lhs",
                          "rhs",    "abs_error", "certified", "terms_used", "status"};
  for (const auto& j : recs) {
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) EXPECT_EQ(it.key(), fields[i]);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_EQ(j["family"], "thm4.2");
    EXPECT_EQ(j["digits"], 30);
    EXPECT_TRUE(j["certified"].get<bool>());
  }
  EXPECT_EQ(recs[0]["n"], 0);
  EXPECT_EQ(recs[0]["x"], "0.25");
  EXPECT_EQ(recs[1]["x"], "0.5");
}

TEST(Cli, CsvHeaderAndRows) {
  Invocation r = run("verify --family cor4.3 --n-range 0..3 --format csv");
  EXPECT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, aseries::cli::kCsvHeader);
  int rows = 0;
  for (std::string line; std::getline(is, line);) rows += !line.empty();
  EXPECT_EQ(rows, 4);
}

TEST(Cli, OutputIsDeterministicAcrossWorkers) {
  Invocation a = run("verify --family thm5.2 --n-range 0..7 --x 0.3 --x 0.6 --digits 25 --jobs 1");
  Invocation b = run("verify --family thm5.2 --n-range 0..7 --x 0.3 --x 0.6 --digits 25 --jobs 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify --family thm3.2 --x 1.5").code, 2);
  EXPECT_EQ(run("verify --family nosuch").code, 2);
  EXPECT_EQ(run("verify --family thm3.2 --n-range 3..1").code, 2);
  EXPECT_EQ(run("verify --family thm3.2 --digits 4").code, 2);
  EXPECT_EQ(run("--bogus").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  // malformed x is a per-record failure, not a usage error
  Invocation bad = run("verify --family thm3.2 --n-range 0..0 --x abc");
  EXPECT_EQ(bad.code, 1);
  auto recs = lines_as_json(bad.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_NE(recs[0]["status"], "ok");
}

TEST(Cli, DigitsFromEnvironment) {
  Invocation r = run("verify --family thm3.2 --n-range 1..1 --x 0.5", "ASERIES_DIGITS=24");
  EXPECT_EQ(r.code, 0);
  auto recs = lines_as_json(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["digits"], 24);
  EXPECT_EQ(run("verify --family thm3.2", "ASERIES_DIGITS=lots").code, 2);
}

TEST(Cli, ClosedFormValues) {
  Invocation r = run("closed-form --family cor4.3 --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run("closed-form --family cor5.3 --n 0").out, "1/48*pi^3\n");
  EXPECT_EQ(run("closed-form --family thm3.2 --n 2 --x 1/2").out, "2/3*pi - sqrt(3)\n");
  EXPECT_EQ(run("closed-form --family thm3.2 --n 2 --x 0.7").code, 2);
}

TEST(Cli, HalfArgumentTable) {
  Invocation r = run("table --corollary 4.4a --format json");
  EXPECT_EQ(r.code, 0);
  auto rows = lines_as_json(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2]["exact"], "1/6*pi^2 - 7/12*pi*sqrt(3) + 13/8");
  Invocation md = run("table --corollary 3.3a --format markdown");
  EXPECT_NE(md.out.find("| 10 | 1/2 | 84*pi - 1523/10*sqrt(3) |"), std::string::npos);
}

TEST(Cli, PiReport) {
  Invocation r = run("pi --power 1 --n 7 --digits 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scaled_exact: pi\n"), std::string::npos);
  Invocation s = run("pi --power 2 --n 4 --digits 20");
  EXPECT_NE(s.out.find("pi^2 - scaled: "), std::string::npos);
}

TEST(Cli, AllFamiliesRunClean) {
  for (const auto& fam : aseries::cli::families()) {
    std::string args = "verify --family " + fam.id + " --digits 20";
    // the x = 1/2 tables have a fixed set of shifts
    if (fam.kind != aseries::cli::Kind::HalfTable) args += " --n-range 1..3";
    if (fam.id == "limit7.1") args += " --p 2";
    Invocation r = run(args);
    EXPECT_EQ(r.code, 0) << fam.id << "\n" << r.out;
  }
}
