#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NACFLEX_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("nacflex_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, NacCount) {
  const auto k33 = temp_file("k33.txt", "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
  const auto r = run("nac count " + k33);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 30);
}

TEST(Cli, NacCheckReportsCycle) {
  const auto bad = temp_file("k3col.json", R"({"graph":{"n":3,"edges":[[0,1],[1,2],[0,2]]},"red":[[0,1]]})");
  const auto r = run("nac check " + bad);
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["is_nac"], false);
  EXPECT_TRUE(j.contains("cycle"));
}

TEST(Cli, CutStable) {
  const auto c4 = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  const auto r = run("cut stable " + c4);
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["certificate"]["s"].size(), 2u);
}

TEST(Cli, RandIsDeterministic) {
  const auto a = run("rand gnp --n 30 --p 0.2 --seed 4");
  const auto b = run("rand gnp --n 30 --p 0.2 --seed 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("rand regular --n 5 --k 3").code, 2);
}

TEST(Cli, SweepCsv) {
  const auto r = run("experiment sweep --property T --n 10,20 --c 1,2 --trials 5 --seed 1 --workers 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,c,p,trials,successes,budget_exceeded,wall_ms");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("nac count /nonexistent/graph.txt").code, 3);
  EXPECT_EQ(run("experiment sweep --property S --n 40 --c 1 --trials 1").code, 2);
  EXPECT_EQ(run("experiment sweep --property Q --n 10 --c 1 --trials 1").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  const auto bad = temp_file("bad.txt", "3 1\n0 9\n");
  EXPECT_EQ(run("cut stable " + bad).code, 2);
}
