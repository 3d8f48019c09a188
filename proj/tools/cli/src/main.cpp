#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "boxlab/cli.hpp"

namespace {

boxlab::ParamMap to_params(const std::vector<std::string>& kvs) {
  boxlab::ParamMap m;
  for (const auto& kv : kvs) m.insert(boxlab::cli::parse_assignment(kv));
  return m;
}

void emit(const std::string& text, const std::string& outFile) {
  if (outFile.empty()) std::cout << text;
  else boxlab::write_file(outFile, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boxlab: bipartite and tripartite nonsignaling boxes"};
  app.require_subcommand(1);

  std::string boxFile, catalog, family, settings, outFile, format = "json";
  std::vector<std::string> params, settingsParams, links, measures{"G", "Q"};
  double visibility = 1.0;
  std::uint64_t seed = 20240601;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--box", boxFile, "Box JSON file");
    c->add_option("--catalog", catalog, "Vertex label (PR000, MerminMM000, Svetlichny Sv0000, ...) or random2/random3");
    c->add_option("--visibility", visibility, "Mix the catalog box with white noise")->check(CLI::Range(0.0, 1.0));
    c->add_option("--family", family, "State family");
    c->add_option("--param", params, "State parameter k=v (repeatable)");
    c->add_option("--settings", settings, "Settings catalog name, e.g. BSb or PRQ(0.5)");
    c->add_option("--settings-param", settingsParams, "Settings parameter k=v (repeatable)");
    c->add_option("--seed", seed, "Seed for random catalog boxes");
  };

  auto* measure = app.add_subcommand("measure", "Discords, correlations and Bell-type values of a box");
  add_source(measure);
  measure->add_option("--format", format, "json|csv|table");

  std::string mode = "three";
  auto* decompose = app.add_subcommand("decompose", "Canonical (two) or 3-decomposition (three) of a box");
  decompose->add_option("mode", mode, "two|three")->check(CLI::IsMember({"two", "three"}));
  add_source(decompose);
  decompose->add_option("--out", outFile, "Write JSON to file");

  auto* stateBox = app.add_subcommand("state-box", "Box from a state family and a settings catalog entry");
  stateBox->add_option("--family", family, "State family")->required();
  stateBox->add_option("--param", params, "State parameter k=v (repeatable)");
  stateBox->add_option("--settings", settings, "Settings catalog name")->required();
  stateBox->add_option("--settings-param", settingsParams, "Settings parameter k=v (repeatable)");
  stateBox->add_option("--out", outFile, "Write JSON to file");

  boxlab::cli::SweepSpec sweep;
  std::string sweepFormat = "csv";
  auto* sweepCmd = app.add_subcommand("sweep", "Evaluate measures over a parameter grid");
  sweepCmd->add_option("--family", sweep.family, "State family")->required();
  sweepCmd->add_option("--param", params, "Fixed state parameter k=v (repeatable)");
  sweepCmd->add_option("--sweep", sweep.param, "Swept state parameter")->required();
  sweepCmd->add_option("--start", sweep.start, "First value")->required();
  sweepCmd->add_option("--stop", sweep.stop, "Last value")->required();
  sweepCmd->add_option("--steps", sweep.steps, "Number of grid points (>= 2)")->required();
  sweepCmd->add_option("--settings", sweep.settings, "Settings catalog name")->required();
  sweepCmd->add_option("--settings-param", settingsParams, "Fixed settings parameter k=v (repeatable)");
  sweepCmd->add_option("--link", links, "Settings parameter fed by the swept value: name[=value|sin2|tau]");
  sweepCmd->add_option("--measures", measures, "Columns to compute")->delimiter(',');
  sweepCmd->add_option("--format", sweepFormat, "csv|table");
  sweepCmd->add_option("--out", outFile, "Write CSV to file");
  sweepCmd->add_option("--seed", seed, "Accepted for reproducibility; sweeps are deterministic");

  std::string verifyFormat = "table";
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--format", verifyFormat, "json|csv|table");
  verify->add_option("--seed", seed, "Seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    using namespace boxlab::cli;
    auto source = [&] {
      BoxSource s{boxFile, catalog, visibility, family, to_params(params), settings, to_params(settingsParams), seed};
      return resolve_box(s);
    };
    if (*measure) {
      std::cout << cmd_measure(source(), parse_format(format));
    } else if (*decompose) {
      emit(cmd_decompose(source(), mode), outFile);
    } else if (*stateBox) {
      emit(cmd_state_box(family, to_params(params), settings, to_params(settingsParams)), outFile);
    } else if (*sweepCmd) {
      sweep.stateParams = to_params(params);
      sweep.settingsParams = to_params(settingsParams);
      sweep.links = links;
      sweep.measures = measures;
      emit(cmd_sweep(sweep, parse_format(sweepFormat)), outFile);
    } else if (*verify) {
      return cmd_verify(std::cout, seed, parse_format(verifyFormat)) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
