#pragma once

#include <optional>
#include <string>

#include "boxlab/box.hpp"
#include "boxlab/qstate.hpp"
#include "boxlab/tribox.hpp"

namespace boxlab {

// {"parties":2,"table":[x][y][a][b]} or {"parties":3,"table":[x][y][z][a][b][c]}.
struct AnyBox {
  std::optional<BipartiteBox> two;
  std::optional<TripartiteBox> three;
  int parties() const { return two ? 2 : 3; }
};

std::string box_to_json(const BipartiteBox& P);
std::string box_to_json(const TripartiteBox& P);
AnyBox box_from_json(const std::string& text);

// {"dim":4,"re":[[..]],"im":[[..]]}; "im" may be omitted for real matrices.
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const std::string& text);

// [[a0, a1], [b0, b1], ...] with each vector a 3-element array.
std::string settings_to_json(const MeasurementSettings& s);
MeasurementSettings settings_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace boxlab
