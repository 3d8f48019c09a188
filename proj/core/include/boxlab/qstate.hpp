#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "boxlab/box.hpp"
#include "boxlab/tribox.hpp"

namespace boxlab {

using Vec3 = std::array<double, 3>;
using ParamMap = std::map<std::string, double>;

// Hermitian, unit-trace, positive semidefinite matrix of dimension 4 or 8.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Eigen::MatrixXcd& m);
  // Normalizes the vector before forming the projector.
  static DensityMatrix from_pure(const Eigen::VectorXcd& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  int qubits() const { return dim() == 4 ? 2 : 3; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

 private:
  Eigen::MatrixXcd rho_;
};

// Per party, two unit Bloch vectors selecting the spin observables for inputs 0 and 1.
struct MeasurementSettings {
  std::vector<std::array<Vec3, 2>> parties;
  int size() const { return static_cast<int>(parties.size()); }
};

void validate_settings(const MeasurementSettings& s, int parties);

BipartiteBox born_box2(const DensityMatrix& rho, const MeasurementSettings& s);
TripartiteBox born_box3(const DensityMatrix& rho, const MeasurementSettings& s);

// T_ij = Tr(rho sigma_i (x) sigma_j) for a two-qubit state.
Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho);
// <A_x B_y> = a_x . T b_y.
double correlation_shortcut(const DensityMatrix& rho, const Vec3& a, const Vec3& b);

Eigen::Matrix2cd projector(const Vec3& n, int outcome);

// Local Bloch vectors and correlation matrix of a two-qubit state; enough to evaluate any
// projective-measurement box as P(a,b|x,y) = (1 + (-1)^a <A_x> + (-1)^b <B_y> + (-1)^(a+b) <A_x B_y>) / 4.
struct BlochData {
  Eigen::Vector3d a;
  Eigen::Vector3d b;
  Eigen::Matrix3d T;
};
BlochData bloch_data(const DensityMatrix& rho);
BipartiteBox born_box2(const BlochData& d, const MeasurementSettings& s);

// Settings catalog. Names may carry their single parameter inline, e.g. "PRQ(0.5)".
MeasurementSettings settings_catalog(const std::string& name, const ParamMap& params = {});
std::vector<std::string> settings_names();

// State catalog.
DensityMatrix make_state(const std::string& family, const ParamMap& params = {});
std::vector<std::string> state_families();

struct EntanglementParams {
  double tangle = 0;
  double concurrence = 0;
  double threeTangle = 0;
  double c12 = 0, c13 = 0, c23 = 0;
  double cAssistMin = 0;
};
EntanglementParams entanglement_params(const std::string& family, const ParamMap& params = {});

double hardy_probability(std::complex<double> b, std::complex<double> c, std::complex<double> d);

// Born-rule evaluation of the state b|01> + c|10> + d|11> under the state-dependent Hardy
// measurements: the three constrained probabilities and the paradox probability.
struct HardyCheck {
  double h1 = 0, h2 = 0, h3 = 0;
  double paradox = 0;
  BipartiteBox box;
};
HardyCheck hardy_check(std::complex<double> b, std::complex<double> c, std::complex<double> d);

DensityMatrix cq_state(double p0, const Vec3& basis, const Vec3& bloch0, const Vec3& bloch1);
DensityMatrix qc_state(double p0, const Vec3& basis, const Vec3& bloch0, const Vec3& bloch1);

}  // namespace boxlab
