#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "poro2d/campaign.hpp"
#include "poro2d/config.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kComputeError = 3;

int run(const std::string& config_path, const std::string& out_dir, bool decompose, bool gnuplot) {
  poro2d::RunConfig cfg;
  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw poro2d::ConfigError(0, "cannot read " + config_path);
    std::ostringstream text;
    text << in.rdbuf();
    cfg = poro2d::parse_config(text.str());
  } catch (const poro2d::ConfigError& e) {
    std::cerr << "config error: " << config_path << ": " << e.what() << '\n';
    return kConfigError;
  }
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (decompose) cfg.decompose = true;
  if (gnuplot) cfg.gnuplot = true;

  try {
    const auto result = poro2d::run_campaign(cfg);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "compute error: " << e.what() << '\n';
    return kComputeError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-analytical Green's function traces for two poroelastic half-spaces"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  bool decompose = false, gnuplot = false;
  auto* cmd = app.add_subcommand("run", "compute receiver traces from a config file");
  cmd->add_option("--config", config_path, "configuration file")->required();
  cmd->add_option("--out", out_dir, "output directory (overrides [output] directory)");
  cmd->add_flag("--decompose", decompose, "write the fourteen phase channels");
  cmd->add_flag("--gnuplot", gnuplot, "write plot.gp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  return run(config_path, out_dir, decompose, gnuplot);
}
