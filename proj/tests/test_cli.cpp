#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/presets.hpp"
#include "cli/run.hpp"
#include "viscowave/models.hpp"
#include "viscowave/response.hpp"

using namespace viscowave;
using namespace viscowave::cli;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "viscowave_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "viscowave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

CsvTable load(const fs::path& p) {
  std::ifstream in(p);
  return read_csv(in);
}

bool has_comment(const CsvTable& t, const std::string& needle) {
  for (const auto& c : t.comments)
    if (c.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Csv, RoundTripIsExact) {
  const std::vector<double> values = {0.1, 1.0 / 3, 6.02214076e23, -2.5e-300, 4.9e-324, 0.0};
  std::stringstream s;
  CsvWriter w(s);
  w.comment("note");
  w.header({"a[1]", "b[m]", "c[s]", "d", "e", "f"});
  w.row(values);
  const auto t = read_csv(s);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.comments.front(), "note");
  EXPECT_EQ(t.columns[1], "b[m]");
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_EQ(t.rows[0][i], values[i]);
}

TEST(Csv, RejectsRaggedRows) {
  std::stringstream s("a,b\n1,2\n3\n");
  EXPECT_THROW(read_csv(s), std::runtime_error);
}

TEST(Config, JsonSettings) {
  const nlohmann::json settings = {
      {"model", {{"family", "strick"}, {"j0", 1}, {"m0", 2}, {"alpha", -0.5}, {"omega", 3}, {"rho", 4}}},
      {"grid", {{"min", 0.5}, {"max", 5}, {"points", 7}, {"spacing", "linear"}}},
      {"path", "both"}};
  const auto c = config_from_json(Command::Response, settings);
  ASSERT_TRUE(c.medium.has_value());
  EXPECT_EQ(c.medium->rho(), 4.0);
  EXPECT_EQ(c.grid.points, 7);
  EXPECT_EQ(c.grid.spacing, Spacing::Linear);
  EXPECT_EQ(c.path, PathChoice::Both);
}

TEST(Config, Errors) {
  const nlohmann::json model = {{"family", "jls"}, {"j0", 1}, {"m0", 1}, {"rho", 1}};
  EXPECT_THROW(config_from_json(Command::Response, {{"model", model}, {"grid", {{"min", 2}, {"max", 1}}}}),
               std::exception);
  EXPECT_THROW(config_from_json(Command::Response, {{"model", model}, {"grid", {{"points", 1}}}}), std::exception);
  auto both = model;
  both["c0"] = 3;
  EXPECT_THROW(config_from_json(Command::Creep, {{"model", both}}), std::exception);
  EXPECT_THROW(config_from_json(Command::Response, {{"model", model}, {"path", "sideways"}}), ConfigError);
}

TEST(Config, FileOverridesFlags) {
  const auto cfg = scratch("override.json");
  std::ofstream(cfg) << R"({"model": {"alpha": 0.25}, "grid": {"points": 4}})";
  const char* argv[] = {"viscowave", "creep", "--model", "jls", "--j0", "1", "--m0", "1", "--alpha", "0.5",
                        "--rho", "1", "--points", "9", "--config", cfg.c_str()};
  const auto c = parse_command_line(16, argv);
  EXPECT_EQ(c.medium->model().as<JeffreysLomnitzStrick>().alpha, 0.25);
  EXPECT_EQ(c.grid.points, 4);
}

TEST(Run, ResponseBothPathsFooter) {
  const auto out = scratch("both.csv");
  const int status = run({"response", "--model", "jls", "--j0", "1", "--m0", "1", "--omega", "1", "--rho", "1",
                          "--fmin", "1e-2", "--fmax", "1e4", "--points", "100", "--path", "both", "--output",
                          out.string()});
  EXPECT_EQ(status, kOk);
  const auto t = load(out);
  EXPECT_EQ(t.rows.size(), 100u);
  EXPECT_TRUE(has_comment(t, "max relative discrepancy"));
  EXPECT_GE(t.columns.size(), 9u);
}

TEST(Run, CsvValuesReproduceLibrary) {
  const auto out = scratch("resp.csv");
  ASSERT_EQ(run({"response", "--model", "strick", "--j0", "1", "--m0", "1", "--alpha", "-0.3", "--omega", "1",
                 "--rho", "1", "--fmin", "0.1", "--fmax", "10", "--points", "5", "--output", out.string()}),
            kOk);
  const auto t = load(out);
  const MediumSpec m(CreepModel::strick_mainardi(1, 1, -0.3, 1), 1.0);
  for (const auto& row : t.rows) {
    const auto r = response_direct(m, row[0]);
    EXPECT_EQ(row[1], r.attenuation);
    EXPECT_EQ(row[2], r.dispersion);
  }
}

TEST(Run, VerifyPasses) {
  const auto out = scratch("verify.csv");
  EXPECT_EQ(run({"verify", "--suite", "duality", "--model", "strick", "--j0", "1", "--m0", "1", "--alpha", "-0.5",
                 "--omega", "1", "--rho", "1", "--output", out.string()}),
            kOk);
  EXPECT_NE(slurp(out).find("# PASS"), std::string::npos);
}

TEST(Run, ExitStatuses) {
  EXPECT_EQ(run({"response", "--model", "maxwell", "--j0", "1"}), kConfigFailure);
  EXPECT_EQ(run({"creep", "--model", "jls", "--j0", "1", "--m0", "1", "--rho", "1", "--alpha", "3"}),
            kConfigFailure);
  EXPECT_EQ(run({"figure", "fig9"}), kConfigFailure);
  EXPECT_EQ(run({"figure", "fig1", "--output", "/nonexistent-dir/x.csv"}), kIoFailure);
  EXPECT_EQ(run({"green", "--model", "jls", "--j0", "1", "--m0", "1", "--rho", "1", "--x", "1", "--margin", "0",
                 "--tmin", "1", "--tmax", "2", "--points", "2"}),
            kConfigFailure);
}

TEST(Run, BinaryReportsConfigFailure) {
  const std::string cmd = std::string(VISCOWAVE_BINARY) + " response --bogus-flag > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(raw));
  EXPECT_EQ(WEXITSTATUS(raw), kConfigFailure);
}

TEST(Presets, Fig1Header) {
  std::stringstream s;
  CsvWriter w(s);
  write_figure("fig1", w, 1);
  const auto t = read_csv(s);
  ASSERT_EQ(t.columns.size(), 4u);
  EXPECT_EQ(t.columns[0].substr(0, 1), "t");
  EXPECT_NE(t.columns[1].find("J_alpha=-0.5"), std::string::npos);
  EXPECT_NE(t.columns[2].find("J_alpha=0"), std::string::npos);
  EXPECT_NE(t.columns[3].find("J_alpha=0.5"), std::string::npos);
}

TEST(Presets, RepeatedRunsAreIdentical) {
  for (const std::string name : {"fig1", "fig2", "fig3", "fig4"}) {
    std::stringstream a, b;
    CsvWriter wa(a), wb(b);
    write_figure(name, wa, 1);
    write_figure(name, wb, 4);
    EXPECT_EQ(a.str(), b.str()) << name;
  }
}
