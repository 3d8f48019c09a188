#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boxlab/io.hpp"
#include "boxlab/qstate.hpp"

namespace boxlab::cli {

enum class Format { Json, Csv, Table };
Format parse_format(const std::string& s);

// Exactly one of boxFile, catalog or family must be set. A catalog label names a vertex box
// (bipartite or tripartite) or "random2"/"random3"; visibility mixes it with white noise.
struct BoxSource {
  std::string boxFile;
  std::string catalog;
  double visibility = 1.0;
  std::string family;
  ParamMap stateParams;
  std::string settings;
  ParamMap settingsParams;
  std::uint64_t seed = 1;
};

AnyBox resolve_box(const BoxSource& src);

std::string cmd_measure(const AnyBox& box, Format format);
std::string cmd_decompose(const AnyBox& box, const std::string& mode);
std::string cmd_state_box(const std::string& family, const ParamMap& stateParams, const std::string& settings,
                          const ParamMap& settingsParams);

// A link "name=rule" feeds the swept value into settings parameter `name`, transformed by rule:
// "value" (unchanged), "sin2" (sin 2v) or "tau" (sin^2 2v).
struct SweepSpec {
  std::string family;
  ParamMap stateParams;
  std::string param;
  double start = 0;
  double stop = 1;
  int steps = 2;
  std::string settings;
  ParamMap settingsParams;
  std::vector<std::string> links;
  std::vector<std::string> measures;
};

std::vector<std::string> sweep_measure_names();
std::string cmd_sweep(const SweepSpec& spec, Format format = Format::Csv);

// Returns the number of failed criteria.
int cmd_verify(std::ostream& out, std::uint64_t seed, Format format);

std::pair<std::string, double> parse_assignment(const std::string& kv);

}  // namespace boxlab::cli
