#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cfor/app/config.hpp"
#include "cfor/app/run.hpp"

using namespace cfor;
using namespace cfor::app;
namespace fs = std::filesystem;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class AppDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    root_ = fs::temp_directory_path() / (std::string("cfor_app_") + info->name());
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = root_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string dir(const std::string& name) const { return (root_ / name).string(); }

  fs::path root_;
};

}  // namespace

TEST(Config, VortexDefaults) {
  const auto cfg = parse("case = vortex\n");
  EXPECT_EQ(cfg.kind, CaseKind::vortex);
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{20, 40}));
  EXPECT_EQ(cfg.t_final, 2.0);
  EXPECT_EQ(cfg.half_width, 32);
  EXPECT_EQ(cfg.r_highpass, 3.2);
  EXPECT_EQ(cfg.r_rest, 3.2);
  EXPECT_EQ(cfg.zeta, 0.0015);
  EXPECT_EQ(cfg.output_dir, "out/vortex");
}

TEST(Config, ShockDefaults) {
  const auto cfg = parse("case = shock_entropy\n");
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{800}));
  EXPECT_EQ(cfg.r_rest, 2.0);
  EXPECT_EQ(cfg.kappa, 13.0);
  EXPECT_EQ(cfg.epsilon, 0.01);
  EXPECT_NEAR(cfg.t_final, 3.5 / 3.549648, 1e-12);
}

TEST(Config, ParsesSectionsAndScheme) {
  const auto cfg = parse(
      "case = vortex\noutput_dir = somewhere\n[scheme]\ncfl = 0.01\nzeta = off\n"
      "sensor_scaling = absolute\n[vortex]\nn = 10 20 40\nt_final = 1\nlambda = 4\n");
  EXPECT_EQ(cfg.output_dir, "somewhere");
  EXPECT_EQ(cfg.cfl, 0.01);
  EXPECT_FALSE(cfg.scheme().filter_enabled());
  EXPECT_EQ(cfg.measure_scaling, MeasureScaling::absolute);
  EXPECT_EQ(cfg.n, (std::vector<std::size_t>{10, 20, 40}));
  EXPECT_EQ(cfg.lambda, 4.0);
  EXPECT_EQ(cfg.scheme().kernel_hp.order, 1);
}

TEST(Config, RejectsUnknownOrInvalidEntries) {
  EXPECT_THROW(parse("case = vortex\ncolour = red\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[scheme]\nwidth = 3\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[shock_entropy]\nkappa = 13\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[extra]\n"), ConfigError);
  EXPECT_THROW(parse("case = cylinder\n"), ConfigError);
  EXPECT_THROW(parse("[scheme]\ncfl = 0.5\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[scheme]\ncfl = fast\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[scheme]\nzeta = 0.1\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[vortex]\nn = 40 20\n"), ConfigError);
  EXPECT_THROW(parse("case = vortex\n[vortex]\nlambda = 20\n"), ConfigError);
  EXPECT_THROW(parse("case = shock_entropy\n[shock_entropy]\nn = 400 800\n"), ConfigError);
  EXPECT_THROW(parse("case = shock_entropy\n[shock_entropy]\nresample = 100\n"), ConfigError);
}

TEST(Config, ResolvedConfigRoundTrips) {
  const auto cfg = parse(
      "case = shock_entropy\n[scheme]\nr_rest = 1.9\n[shock_entropy]\nkappa = 26\nresample = 1600\n");
  std::ostringstream os;
  write_config(os, cfg);
  const auto again = parse(os.str());
  std::ostringstream os2;
  write_config(os2, again);
  EXPECT_EQ(os.str(), os2.str());
  EXPECT_EQ(again.kappa, 26.0);
  EXPECT_EQ(again.r_rest, 1.9);
  EXPECT_EQ(again.resample, std::optional<std::size_t>(1600));
  EXPECT_EQ(again.filter_variables, cfg.filter_variables);
}

TEST_F(AppDir, KernelReportIsByteIdenticalAcrossRuns) {
  const auto config = write("k.ini", "case = kernel_report\n[kernel_report]\nsamples = 51\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_command(config, dir("a"), out, err), 0) << err.str();
  ASSERT_EQ(run_command(config, dir("b"), out, err), 0) << err.str();
  for (const char* name : {"spectra.csv", "taps_q0.csv", "taps_q1.csv", "taps_q2.csv"}) {
    const auto a = slurp(root_ / "a" / name);
    ASSERT_FALSE(a.empty()) << name;
    EXPECT_EQ(a, slurp(root_ / "b" / name)) << name;
  }
  const auto spectra = slurp(root_ / "a" / "spectra.csv");
  EXPECT_EQ(spectra.substr(0, spectra.find('\n')), "filter,omega_over_pi,magnitude,ideal_magnitude");
  EXPECT_NE(spectra.find("\nq0,0,1,1\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(root_ / "a" / "config.resolved.ini"));
}

TEST_F(AppDir, VortexRunWritesOrderColumn) {
  const auto config = write(
      "v.ini", "case = vortex\n[vortex]\nn = 16 32\nt_final = 0.25\noutput_times = 0.25\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_command(config, dir("v"), out, err), 0) << err.str();
  std::ifstream in(root_ / "v" / "errors.csv");
  std::string header, coarse, fine;
  std::getline(in, header);
  std::getline(in, coarse);
  std::getline(in, fine);
  EXPECT_EQ(header, "N,cfl,t,l1,l2,order_l1,order_l2");
  EXPECT_EQ(coarse.substr(0, 3), "16,");
  EXPECT_EQ(fine.substr(0, 3), "32,");
  const double order = std::stod(fine.substr(fine.rfind(',', fine.rfind(',') - 1) + 1));
  EXPECT_GT(order, 3.0);
  EXPECT_TRUE(fs::exists(root_ / "v" / "sensor_N16.csv"));
  EXPECT_TRUE(fs::exists(root_ / "v" / "snapshot_N32_t0.25.csv"));
}

TEST_F(AppDir, InvalidConfigGivesJsonRecord) {
  const auto config = write("bad.ini", "case = vortex\n[scheme]\ncfl = -1\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_command(config, dir("bad"), out, err), 2);
  EXPECT_NE(err.str().find("\"kind\":\"invalid_config\""), std::string::npos) << err.str();
  EXPECT_TRUE(fs::exists(root_ / "bad" / "error.json"));
}

TEST_F(AppDir, TableRejectsMismatchedConfigs) {
  const auto a = write("a.ini", "case = vortex\n[vortex]\nn = 16\n");
  const auto b = write("b.ini", "case = vortex\n[scheme]\ncfl = 0.25\n[vortex]\nn = 32\n");
  const auto k = write("k.ini", "case = kernel_report\n");
  std::ostringstream out, err;
  EXPECT_EQ(table_command({a, b}, dir("t"), out, err), 2);
  EXPECT_EQ(table_command({a, k}, dir("t"), out, err), 2);
  EXPECT_EQ(table_command({a}, dir("t"), out, err), 2);
  EXPECT_NE(err.str().find("at least two grids"), std::string::npos) << err.str();
}
