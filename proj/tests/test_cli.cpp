#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(PORO2D_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("poro2d_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, RunGoldenConfig) {
  const fs::path out = scratch("ok");
  EXPECT_EQ(run("run --config " + std::string(PORO2D_CONFIG_DIR) + "/golden_bulk.cfg --out " + out.string() +
                " --decompose --gnuplot"),
            0);
  EXPECT_TRUE(fs::exists(out / "receiver_1.csv"));
  EXPECT_TRUE(fs::exists(out / "receiver_2.csv"));
  EXPECT_TRUE(fs::exists(out / "manifest.csv"));
  EXPECT_TRUE(fs::exists(out / "plot.gp"));
  fs::remove_all(out);
}

TEST(Cli, ConfigErrorExitCode) {
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.cfg") << "[source]\ndepth = 1\ndepth = 2\n";
  EXPECT_EQ(run("run --config " + (dir / "bad.cfg").string()), 2);
  EXPECT_EQ(run("run --config " + (dir / "missing.cfg").string()), 2);
  EXPECT_EQ(run("run"), 2);
  fs::remove_all(dir);
}

TEST(Cli, ComputeErrorExitCode) {
  const fs::path dir = scratch("late");
  fs::create_directories(dir);
  std::ifstream in(std::string(PORO2D_CONFIG_DIR) + "/golden_bulk.cfg");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  text.replace(text.find("t_start = 0"), 11, "t_start = 0.5");
  std::ofstream(dir / "late.cfg") << text;
  EXPECT_EQ(run("run --config " + (dir / "late.cfg").string() + " --out " + (dir / "out").string()), 3);
  fs::remove_all(dir);
}
