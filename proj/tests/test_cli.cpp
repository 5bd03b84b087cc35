#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  std::string out;
  int code;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(ODZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  int status = pclose(p);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("odz_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, InterpSwap) {
  CliRun r = run("interp --n 2 'X[1,2]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), R"({"entries":[["0","1"],["1","0"]],"n":2})");
  EXPECT_EQ(trim(run("interp --n 2 eps").out), R"({"entries":[["1","0"],["0","1"]],"n":2})");
  CliRun h = run("interp --n 2 IH --scaled");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("\"integral\""), std::string::npos);
}

TEST(Cli, SynthExitCodes) {
  std::string id = temp_file("id.json", R"({"n":3,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
  CliRun a = run("synth " + id);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(trim(a.out), "eps");
  std::string bad = temp_file("bad.json", R"({"n":2,"entries":[["1","1"],["0","1"]]})");
  EXPECT_EQ(run("synth " + bad).code, 2);
  std::string junk = temp_file("junk.json", R"({"n":2,"entries":[["1"]]})");
  EXPECT_EQ(run("synth " + junk).code, 1);
}

TEST(Cli, SynthAfterInterpRecoversTheWordUpToNormalForm) {
  for (const char* word : {"K[1,2,3,4]", "X[1,3] (-1)[2] K[1,2,3,4] X[2,4]"}) {
    CliRun m = run(std::string("interp --n 4 '") + word + "'");
    ASSERT_EQ(m.code, 0);
    std::string file = temp_file("pipe.json", m.out);
    CliRun s = run("synth " + file);
    ASSERT_EQ(s.code, 0);
    CliRun a = run("equal --n 4 '" + trim(s.out) + "' '" + word + "'");
    EXPECT_EQ(trim(a.out), "equal") << word;
  }
}

TEST(Cli, NormalizeAndEqual) {
  EXPECT_EQ(trim(run("normalize --n 2 '(-1)[1] (-1)[1]'").out), "eps");
  CliRun e = run("equal --n 6 'K[1,2,3,4] K[2,4,5,6]' 'K[3,4,5,6] K[1,2,3,5]'");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(trim(e.out), "equal");
  CliRun d = run("equal --n 3 'X[1,2]' 'X[1,3]'");
  EXPECT_EQ(d.code, 3);
  EXPECT_EQ(trim(d.out), "different");
  EXPECT_EQ(run("equal --n 3 'X[1,2]'").code, 1);
  EXPECT_EQ(run("normalize --n 2 'X[1,5]'").code, 1);
}

TEST(Cli, VerifySelectedRelations) {
  CliRun r = run("verify --n 6 --relations R1,ksym3,S4,D-ksym2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run("verify --n 6 --relations nothing").code, 1);
}

TEST(Cli, RandomIsDeterministic) {
  CliRun a = run("random --n 6 --len 50 --seed 42");
  CliRun b = run("random --n 6 --len 50 --seed 42");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("random --n 6 --len 50 --seed 43").out);
}
