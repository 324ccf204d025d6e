#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace poro2d;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(PORO2D_CONFIG_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line;
  }
  ADD_FAILURE() << "expected ConfigError";
  return 0;
}

std::string minimal() {
  return R"([layer.top]
rho_s = 2200
rho_f = 950
phi = 0.4
tortuosity = 2
K_s = 6.9e9
K_f = 2e9
K_b = 6.7e9
mu = 3e9
[layer.bottom]
rho_s = 2650
rho_f = 750
phi = 0.2
tortuosity = 2
K_s = 37e9
K_f = 1.7e9
K_b = 2.2e9
mu = 4.4e9
[source]
depth = 500
f_p = 1
[receivers]
receiver = 400, 533
)";
}

}  // namespace

TEST(Config, GoldenBulk) {
  const RunConfig c = parse_config(read("golden_bulk.cfg"));
  EXPECT_EQ(c.top.rho_s, 2200);
  EXPECT_EQ(c.top.K_s, 6.9e9);
  EXPECT_EQ(c.bottom.K_b, 2.2e9);
  EXPECT_EQ(c.bottom.mu, 4.4e9);
  EXPECT_EQ(c.source_depth, 500);
  EXPECT_EQ(c.mix, (SourceMix{-1e10, -1e10, 0}));
  EXPECT_EQ(c.wavelet.kind, WaveletKind::gauss5);
  EXPECT_EQ(c.wavelet.f0, 15);
  ASSERT_EQ(c.receivers.size(), 2u);
  EXPECT_EQ(c.receivers[0], (Receiver{400, 533}));
  EXPECT_EQ(c.receivers[1], (Receiver{400, -533}));
  EXPECT_EQ(c.grid.t_start, 0);
  EXPECT_EQ(c.grid.t_end, 1);
  EXPECT_DOUBLE_EQ(c.resolved_grid().base_dt, 1.0 / 600);
  EXPECT_TRUE(c.decompose);
}

TEST(Config, GoldenPressure) {
  const RunConfig c = parse_config(read("golden_pressure.cfg"));
  EXPECT_EQ(c.mix, (SourceMix{0, 0, 1}));
  EXPECT_EQ(c.receivers.size(), 2u);
}

TEST(Config, Defaults) {
  const RunConfig c = parse_config(minimal());
  EXPECT_EQ(c.mix, (SourceMix{0, 0, 1}));
  EXPECT_EQ(c.wavelet.kind, WaveletKind::gauss5);
  EXPECT_EQ(c.grid.t_end, 1.0);
  EXPECT_EQ(c.output_dir, "out");
}

TEST(Config, RoundTrip) {
  for (const std::string& text : {read("golden_bulk.cfg"), read("golden_pressure.cfg"), minimal()}) {
    const std::string once = serialize_config(parse_config(text));
    EXPECT_EQ(serialize_config(parse_config(once)), once);
  }
  RunConfig c = parse_config(minimal());
  c.wavelet.kind = WaveletKind::custom;
  c.wavelet.samples = {{0.0, 0.1}, {0.1, 1.0 / 3.0}};
  c.top.phi = 0.1 + 0.2;
  const RunConfig back = parse_config(serialize_config(c));
  EXPECT_EQ(back.top.phi, c.top.phi);
  EXPECT_EQ(back.wavelet.samples, c.wavelet.samples);
}

TEST(Config, EmptyReceiverListRejected) {
  std::string text = minimal();
  text.replace(text.find("receiver = 400, 533"), 19, "");
  EXPECT_THROW(parse_config(text), ConfigError);
}

TEST(Config, DuplicateKeyRejected) {
  EXPECT_EQ(error_line(minimal() + "[grid]\nt_end = 1\nt_end = 2\n"), 26u);
}

TEST(Config, UnknownKeyAndSection) {
  EXPECT_EQ(error_line(minimal() + "[grid]\nspeed = 1\n"), 25u);
  EXPECT_EQ(error_line(minimal() + "[extra]\n"), 24u);
  EXPECT_EQ(error_line("rho_s = 1\n"), 1u);
}

TEST(Config, BadValues) {
  EXPECT_EQ(error_line(minimal() + "[grid]\nt_end = soon\n"), 25u);
  EXPECT_EQ(error_line(minimal() + "[output]\ndecompose = maybe\n"), 25u);
  EXPECT_EQ(error_line(minimal() + "[receivers]\n"), 24u);  // section repeated
  std::string text = minimal();
  text.replace(text.find("depth = 500"), 11, "depth = -5");
  EXPECT_THROW(parse_config(text), ConfigError);
  EXPECT_THROW(parse_config(minimal() + "receiver = 1, 0\n"), ConfigError);
  EXPECT_THROW(parse_config(minimal() + "receiver = 1\n"), ConfigError);
}

TEST(Config, MaterialInvariantNamed) {
  std::string text = minimal();
  text.replace(text.find("phi = 0.4"), 9, "phi = 1.4");
  try {
    parse_config(text);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("phi"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("layer.top"), std::string::npos);
  }
}

TEST(Config, NumberFormatRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 6.9e9, -1e10, 5e-324, 1.7976931348623157e308})
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v);
  EXPECT_EQ(format_number(500.0), "500");
}
