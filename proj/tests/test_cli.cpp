#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "nrad/json_io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NRAD_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("nrad_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    nrad::write_matrix_file(dir_ / "j.json", nrad::test::jordan());
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Radius) {
  const auto r = run("radius --matrix " + path("j.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"w\": 0.49999999"), std::string::npos) << r.out;
  EXPECT_EQ(run("radius --matrix " + path("missing.json")).status, 2);
}

TEST_F(Cli, BoundAndOptimize) {
  auto r = run("bound --matrix " + path("j.json") + " --bound th5 --lambda 1 --mode inequality");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"holds\": true"), std::string::npos) << r.out;
  r = run("optimize --matrix " + path("j.json") + " --bound th4");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("lambda->0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"infimum\": 0.0625"), std::string::npos) << r.out;
  EXPECT_EQ(run("bound --matrix " + path("j.json") + " --bound nope").status, 2);
}

TEST_F(Cli, VerifyWritesReport) {
  const auto r = run("verify --ensemble gue --dim 3 --trials 4 --seed 1 --out " + path("r.csv") + " --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(fs::exists(path("r.csv")));
  EXPECT_EQ(run("verify --ensemble nope --dim 3 --trials 4 --seed 1 --out " + path("x.json")).status, 2);
  EXPECT_EQ(run("verify --ensemble gue --dim 1 --trials 4 --seed 1 --out " + path("x.json")).status, 2);
  EXPECT_EQ(run("verify --dim 3").status, 2);
  EXPECT_EQ(run("").status, 2);
}
