#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "boxlab/cli.hpp"
#include "boxlab/discord2.hpp"
#include "json.hpp"

using namespace boxlab;
using namespace boxlab::cli;
using json = nlohmann::json;

namespace {

int run(const std::string& args, std::string* out = nullptr) {
  const auto tmp = std::filesystem::temp_directory_path() / "boxlab_cli_out.txt";
  const std::string cmd = std::string(BOXLAB_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (out) *out = read_file(tmp.string());
  std::filesystem::remove(tmp);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

BoxSource catalog(const std::string& name, double visibility = 1.0) {
  BoxSource s;
  s.catalog = name;
  s.visibility = visibility;
  return s;
}

}  // namespace

TEST(CliMeasure, PrBoxIsNonlocalWithMaximalDiscord) {
  const json j = json::parse(cmd_measure(resolve_box(catalog("PR000")), Format::Json));
  EXPECT_NEAR(j["G"].get<double>(), 4.0, 1e-12);
  EXPECT_EQ(j["locality"], "nonlocal");
  EXPECT_EQ(j["violatedFacet"], "CHSH000");
}

TEST(CliMeasure, NoiseIsAllZeroAndLocal) {
  const json j = json::parse(cmd_measure(resolve_box(catalog("Noise")), Format::Json));
  for (const auto& key : {"G", "Q", "T", "C", "CHSH000", "M00"}) EXPECT_EQ(j[key].get<double>(), 0.0) << key;
  EXPECT_EQ(j["locality"], "local");
}

TEST(CliMeasure, TsirelsonBox) {
  const json j = json::parse(cmd_measure(resolve_box(catalog("Tsirelson000")), Format::Json));
  EXPECT_NEAR(j["CHSH000"].get<double>(), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(j["G"].get<double>(), 2 * std::sqrt(2.0), 1e-12);
}

TEST(CliMeasure, TripartiteReport) {
  const json j = json::parse(cmd_measure(resolve_box(catalog("Sv0000")), Format::Json));
  EXPECT_NEAR(j["G"].get<double>(), 8.0, 1e-12);
  EXPECT_EQ(j["locality"], "two-way-nonlocal");
}

TEST(CliMeasure, CsvAndTableFormats) {
  const std::string csv = cmd_measure(resolve_box(catalog("PR000")), Format::Csv);
  EXPECT_EQ(csv.substr(0, 8), "G,Q,T,C,");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  const std::string table = cmd_measure(resolve_box(catalog("PR000")), Format::Table);
  EXPECT_NE(table.find("locality"), std::string::npos);
}

TEST(CliDecompose, IsotropicPr) {
  const json j = json::parse(cmd_decompose(resolve_box(catalog("PR000", 0.7)), "two"));
  EXPECT_NEAR(j["mu"].get<double>(), 0.7, 1e-12);
  const AnyBox residual = box_from_json(j["residual"].dump());
  EXPECT_LT(max_abs_diff(*residual.two, vertex(VertexId::noise())), 1e-9);
}

TEST(CliDecompose, MerminBoxThree) {
  const json j = json::parse(cmd_decompose(resolve_box(catalog("MerminMM000")), "three"));
  EXPECT_NEAR(j["nu"].get<double>(), 1.0, 1e-12);
}

TEST(CliDecompose, BellStateMeb1) {
  BoxSource s;
  s.family = "PsiPlus";
  s.settings = "meb1";
  s.settingsParams = {{"p", 0.75}};
  const json j = json::parse(cmd_decompose(resolve_box(s), "three"));
  EXPECT_NEAR(j["mu"].get<double>(), 0.5, 1e-9);
  EXPECT_NEAR(j["nu"].get<double>(), std::sqrt(0.75) - 0.5, 1e-9);
  EXPECT_THROW(cmd_decompose(resolve_box(s), "four"), Error);
}

TEST(CliStateBox, ProducesValidBox) {
  const AnyBox b = box_from_json(cmd_state_box("Werner2", {{"p", 0.5}}, "BSb", {}));
  ASSERT_TRUE(b.two.has_value());
  EXPECT_NEAR(bell_discord(*b.two), std::sqrt(2.0), 1e-12);
}

TEST(CliSweep, SchmidtBellCurves) {
  SweepSpec spec;
  spec.family = "Schmidt";
  spec.param = "theta";
  spec.start = 0;
  spec.stop = std::acos(-1.0) / 4;
  spec.steps = 6;
  spec.settings = "BSb";
  spec.measures = {"CHSH", "G"};
  std::istringstream in(cmd_sweep(spec));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,CHSH,G");
  int rows = 0;
  while (std::getline(in, line)) {
    double theta, chsh, g;
    char c1, c2;
    std::istringstream row(line);
    row >> theta >> c1 >> chsh >> c2 >> g;
    const double want = 2 * std::sqrt(2.0) * std::sin(2 * theta);
    EXPECT_NEAR(chsh, want, 1e-10);
    EXPECT_NEAR(g, want, 1e-10);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

TEST(CliSweep, LinkedSettingsParameter) {
  SweepSpec spec;
  spec.family = "Schmidt";
  spec.param = "theta";
  spec.start = 0.2;
  spec.stop = 0.7;
  spec.steps = 3;
  spec.settings = "PRQ";
  spec.links = {"tau=tau"};
  spec.measures = {"CHSH"};
  std::istringstream in(cmd_sweep(spec));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const double theta = std::stod(line.substr(0, line.find(',')));
    const double chsh = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(chsh, 2 * std::sqrt(1 + std::pow(std::sin(2 * theta), 2)), 1e-10);
  }
}

TEST(CliSweep, RejectsBadSpecs) {
  SweepSpec spec;
  spec.family = "Schmidt";
  spec.param = "theta";
  spec.steps = 1;
  spec.settings = "BSb";
  spec.measures = {"G"};
  EXPECT_THROW(cmd_sweep(spec), Error);
  spec.steps = 3;
  spec.measures = {"Bogus"};
  EXPECT_THROW(cmd_sweep(spec), Error);
  spec.measures = {"S"};
  EXPECT_THROW(cmd_sweep(spec), Error);
}

TEST(CliArgs, AssignmentParsing) {
  EXPECT_EQ(parse_assignment("p=0.25").second, 0.25);
  EXPECT_THROW(parse_assignment("p"), Error);
  EXPECT_THROW(parse_assignment("p=abc"), Error);
  EXPECT_THROW(parse_assignment("p=1x"), Error);
}

TEST(CliBinary, ExitCodes) {
  std::string out;
  EXPECT_EQ(run("measure --catalog PR000 --format table", &out), 0);
  EXPECT_NE(out.find("nonlocal"), std::string::npos);
  EXPECT_EQ(run("measure --catalog NotABox", &out), 2);
  EXPECT_EQ(run("measure --box /nonexistent/box.json", &out), 2);
  EXPECT_EQ(run("measure --catalog PR000 --family Schmidt", &out), 2);
  EXPECT_EQ(run("frobnicate", &out), 2);
  EXPECT_EQ(run("state-box --family Werner2 --param p=2 --settings BSb", &out), 2);
}

TEST(CliBinary, StateBoxThenMeasureViaFile) {
  const auto path = std::filesystem::temp_directory_path() / "boxlab_cli_box.json";
  ASSERT_EQ(run("state-box --family Werner2 --param p=0.5 --settings MSb --out " + path.string()), 0);
  std::string out;
  ASSERT_EQ(run("measure --box " + path.string() + " --format json", &out), 0);
  EXPECT_NEAR(json::parse(out)["Q"].get<double>(), 1.0, 1e-9);
  std::filesystem::remove(path);
}

TEST(CliBinary, SweepIsDeterministic) {
  std::string a, b;
  const std::string args =
      "sweep --family Werner2 --sweep p --start 0 --stop 1 --steps 5 --settings BSb --measures G,Q,T --seed 7";
  ASSERT_EQ(run(args, &a), 0);
  ASSERT_EQ(run(args, &b), 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "p,G,Q,T");
}
