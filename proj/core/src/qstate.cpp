#include "boxlab/qstate.hpp"

#include <cmath>

namespace boxlab {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

const Eigen::Matrix2cd& pauli(int k) {
  static const std::array<Eigen::Matrix2cd, 3> s = [] {
    std::array<Eigen::Matrix2cd, 3> m;
    m[0] << 0, 1, 1, 0;
    m[1] << 0, cd(0, -1), cd(0, 1), 0;
    m[2] << 1, 0, 0, -1;
    return m;
  }();
  return s[k];
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || (m.rows() != 4 && m.rows() != 8))
    throw Error(ErrorCode::InvalidState, "density matrix must be 4x4 or 8x8");
  if (!m.allFinite()) throw Error(ErrorCode::InvalidState, "density matrix has non-finite entries");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kEps) throw Error(ErrorCode::InvalidState, "matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  const cd tr = m.trace();
  if (std::abs(tr - cd(1.0, 0.0)) > kEps)
    throw Error(ErrorCode::InvalidState, "trace is " + std::to_string(tr.real()) + ", expected 1");
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const double minEig = es.eigenvalues().minCoeff();
  if (minEig < -1e-8) throw Error(ErrorCode::InvalidState, "negative eigenvalue " + std::to_string(minEig));
  DensityMatrix d;
  d.rho_ = h;
  return d;
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd& psi) {
  const double n = psi.norm();
  if (n < kEps) throw Error(ErrorCode::InvalidState, "zero state vector");
  const Eigen::VectorXcd v = psi / n;
  return from_matrix(v * v.adjoint());
}

Eigen::Matrix2cd projector(const Vec3& n, int outcome) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  const double s = outcome == 0 ? 1.0 : -1.0;
  for (int k = 0; k < 3; ++k) m += s * n[k] * pauli(k);
  return 0.5 * m;
}

void validate_settings(const MeasurementSettings& s, int parties) {
  if (s.size() != parties)
    throw Error(ErrorCode::InvalidInput, "settings list " + std::to_string(s.size()) + " parties, expected " +
                                             std::to_string(parties));
  for (int q = 0; q < s.size(); ++q)
    for (int i = 0; i < 2; ++i) {
      const auto& v = s.parties[q][i];
      const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (std::abs(n - 1.0) > kEps)
        throw Error(ErrorCode::InvalidInput, "measurement vector for party " + std::to_string(q) + " input " +
                                                 std::to_string(i) + " has norm " + std::to_string(n));
    }
}

BipartiteBox born_box2(const DensityMatrix& rho, const MeasurementSettings& s) {
  if (rho.dim() != 4) throw Error(ErrorCode::InvalidState, "born_box2 needs a two-qubit state");
  validate_settings(s, 2);
  std::array<double, BipartiteBox::kSize> t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Eigen::MatrixXcd op = kron(projector(s.parties[0][x], a), projector(s.parties[1][y], b));
          t[BipartiteBox::index(x, y, a, b)] = (rho.matrix() * op).trace().real();
        }
  return make_box(t);
}

TripartiteBox born_box3(const DensityMatrix& rho, const MeasurementSettings& s) {
  if (rho.dim() != 8) throw Error(ErrorCode::InvalidState, "born_box3 needs a three-qubit state");
  validate_settings(s, 3);
  std::array<double, TripartiteBox::kSize> t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
              const Eigen::MatrixXcd op = kron(kron(projector(s.parties[0][x], a), projector(s.parties[1][y], b)),
                                               projector(s.parties[2][z], c));
              t[TripartiteBox::index(x, y, z, a, b, c)] = (rho.matrix() * op).trace().real();
            }
  return make_box3(t);
}

Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::InvalidState, "correlation matrix needs a two-qubit state");
  Eigen::Matrix3d T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T(i, j) = (rho.matrix() * kron(pauli(i), pauli(j))).trace().real();
  return T;
}

BlochData bloch_data(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::InvalidState, "Bloch data needs a two-qubit state");
  BlochData d;
  d.T = correlation_matrix(rho);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 3; ++k) {
    d.a(k) = (rho.matrix() * kron(pauli(k), id)).trace().real();
    d.b(k) = (rho.matrix() * kron(id, pauli(k))).trace().real();
  }
  return d;
}

BipartiteBox born_box2(const BlochData& d, const MeasurementSettings& s) {
  validate_settings(s, 2);
  std::array<double, BipartiteBox::kSize> t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Eigen::Vector3d ax(s.parties[0][x][0], s.parties[0][x][1], s.parties[0][x][2]);
      const Eigen::Vector3d by(s.parties[1][y][0], s.parties[1][y][1], s.parties[1][y][2]);
      const double ea = d.a.dot(ax), eb = d.b.dot(by), eab = ax.dot(d.T * by);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[BipartiteBox::index(x, y, a, b)] = 0.25 * (1 + sgn_bit(a) * ea + sgn_bit(b) * eb + sgn_bit(a ^ b) * eab);
    }
  return make_box(t);
}

double correlation_shortcut(const DensityMatrix& rho, const Vec3& a, const Vec3& b) {
  const Eigen::Matrix3d T = correlation_matrix(rho);
  const Eigen::Vector3d va(a[0], a[1], a[2]), vb(b[0], b[1], b[2]);
  return va.dot(T * vb);
}

double hardy_probability(std::complex<double> b, std::complex<double> c, std::complex<double> d) {
  const double nb = std::norm(b), nc = std::norm(c), nd = std::norm(d);
  if (nb + nc + nd > 1.0 + kEps) throw Error(ErrorCode::InvalidState, "amplitudes exceed unit norm");
  const double den = (nb + nd) * (nc + nd);
  if (den < kEps) throw Error(ErrorCode::DegenerateState, "Hardy measurement vectors are undefined for this state");
  return nb * nc * nd / den;
}

namespace {

Eigen::Matrix2cd qubit_state(const Vec3& r) {
  const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (n > 1.0 + kEps) throw Error(ErrorCode::InvalidState, "Bloch vector longer than 1");
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 3; ++k) m += r[k] * pauli(k);
  return 0.5 * m;
}

Vec3 unit(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n < kEps) throw Error(ErrorCode::InvalidState, "basis direction must be nonzero");
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

DensityMatrix cq_state(double p0, const Vec3& basis, const Vec3& bloch0, const Vec3& bloch1) {
  if (p0 < 0 || p0 > 1) throw Error(ErrorCode::InvalidState, "classical weight outside [0,1]");
  const Eigen::MatrixXcd m = p0 * kron(projector(unit(basis), 0), qubit_state(bloch0)) +
                             (1 - p0) * kron(projector(unit(basis), 1), qubit_state(bloch1));
  return DensityMatrix::from_matrix(m);
}

DensityMatrix qc_state(double p0, const Vec3& basis, const Vec3& bloch0, const Vec3& bloch1) {
  if (p0 < 0 || p0 > 1) throw Error(ErrorCode::InvalidState, "classical weight outside [0,1]");
  const Eigen::MatrixXcd m = p0 * kron(qubit_state(bloch0), projector(unit(basis), 0)) +
                             (1 - p0) * kron(qubit_state(bloch1), projector(unit(basis), 1));
  return DensityMatrix::from_matrix(m);
}

}  // namespace boxlab
