#include <cmath>
#include <functional>
#include <numbers>

#include "boxlab/qstate.hpp"

namespace boxlab {

namespace {

using cd = std::complex<double>;

double get(const ParamMap& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

double need(const ParamMap& p, const std::string& key, const std::string& family) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorCode::InvalidInput, "state family '" + family + "' needs parameter " + key);
  return it->second;
}

void require_range(double v, double lo, double hi, const std::string& what) {
  if (!(v >= lo - kEps && v <= hi + kEps))
    throw Error(ErrorCode::InvalidInput, what + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "]");
}

Eigen::VectorXcd basis(int dim, int index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return v;
}

Eigen::MatrixXcd proj(const Eigen::VectorXcd& v) {
  const Eigen::VectorXcd u = v / v.norm();
  return u * u.adjoint();
}

Eigen::VectorXcd psi_plus() { return (basis(4, 0) + basis(4, 3)) / std::sqrt(2.0); }
Eigen::VectorXcd ghz() { return (basis(8, 0) + basis(8, 7)) / std::sqrt(2.0); }
Eigen::VectorXcd w_state() { return (basis(8, 4) + basis(8, 2) + basis(8, 1)) / std::sqrt(3.0); }

Eigen::VectorXcd schmidt(double theta) { return std::cos(theta) * basis(4, 0) + std::sin(theta) * basis(4, 3); }
Eigen::VectorXcd gghz(double theta) { return std::cos(theta) * basis(8, 0) + std::sin(theta) * basis(8, 7); }

Eigen::VectorXcd ghz_class(double theta, double theta3) {
  return std::cos(theta) * basis(8, 0) +
         std::sin(theta) * (std::cos(theta3) * basis(8, 6) + std::sin(theta3) * basis(8, 7));
}

std::array<double, 3> w_amplitudes(const ParamMap& p) {
  const double a = get(p, "a", 1.0), b = get(p, "b", 1.0), c = get(p, "c", 1.0);
  const double n = std::sqrt(a * a + b * b + c * c);
  if (n < kEps) throw Error(ErrorCode::InvalidState, "W-class amplitudes are all zero");
  return {a / n, b / n, c / n};
}

Vec3 vec_param(const ParamMap& p, const std::string& prefix, const Vec3& fallback) {
  return {get(p, prefix + "x", fallback[0]), get(p, prefix + "y", fallback[1]), get(p, prefix + "z", fallback[2])};
}

using Builder = std::function<DensityMatrix(const ParamMap&)>;

const std::map<std::string, Builder>& families() {
  static const std::map<std::string, Builder> f = {
      {"Schmidt", [](const ParamMap& p) { return DensityMatrix::from_pure(schmidt(need(p, "theta", "Schmidt"))); }},
      {"PsiPlus", [](const ParamMap&) { return DensityMatrix::from_pure(psi_plus()); }},
      {"Singlet",
       [](const ParamMap&) { return DensityMatrix::from_pure((basis(4, 1) - basis(4, 2)) / std::sqrt(2.0)); }},
      {"Werner2",
       [](const ParamMap& p) {
         const double v = need(p, "p", "Werner2");
         require_range(v, 0, 1, "p");
         return DensityMatrix::from_matrix(v * proj(psi_plus()) + (1 - v) * Eigen::MatrixXcd::Identity(4, 4) / 4.0);
       }},
      {"BellCC",
       [](const ParamMap& p) {
         const double v = need(p, "p", "BellCC");
         require_range(v, 0, 1, "p");
         return DensityMatrix::from_matrix(v * proj(psi_plus()) +
                                           (1 - v) * 0.5 * (proj(basis(4, 0)) + proj(basis(4, 3))));
       }},
      {"BellDiagonal",
       [](const ParamMap& p) {
         Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
         double total = 0;
         const cd phase[4] = {1.0, -1.0, cd(0, 1), cd(0, -1)};
         for (int k = 0; k < 8; ++k) {
           const double w = get(p, "w" + std::to_string(k), k == 0 ? 1.0 : 0.0);
           if (w < -kEps) throw Error(ErrorCode::BadWeights, "negative Bell-diagonal weight");
           total += w;
           const int j = k % 4;
           const Eigen::VectorXcd v = k < 4 ? Eigen::VectorXcd(basis(4, 0) + phase[j] * basis(4, 3))
                                            : Eigen::VectorXcd(basis(4, 1) + phase[j] * basis(4, 2));
           m += w * proj(v);
         }
         if (std::abs(total - 1.0) > kEps) throw Error(ErrorCode::BadWeights, "Bell-diagonal weights must sum to 1");
         return DensityMatrix::from_matrix(m);
       }},
      {"CQ",
       [](const ParamMap& p) {
         return cq_state(get(p, "p0", 0.5), vec_param(p, "n", {0, 0, 1}), vec_param(p, "r0", {1, 0, 0}),
                         vec_param(p, "r1", {0, 1, 0}));
       }},
      {"QC",
       [](const ParamMap& p) {
         return qc_state(get(p, "p0", 0.5), vec_param(p, "n", {0, 0, 1}), vec_param(p, "r0", {1, 0, 0}),
                         vec_param(p, "r1", {0, 1, 0}));
       }},
      {"Hardy",
       [](const ParamMap& p) {
         Eigen::VectorXcd v = get(p, "b", 0) * basis(4, 1) + get(p, "c", 0) * basis(4, 2) + get(p, "d", 0) * basis(4, 3);
         return DensityMatrix::from_pure(v);
       }},
      {"GGHZ", [](const ParamMap& p) { return DensityMatrix::from_pure(gghz(need(p, "theta", "GGHZ"))); }},
      {"GHZ", [](const ParamMap&) { return DensityMatrix::from_pure(ghz()); }},
      {"GhzClass",
       [](const ParamMap& p) {
         return DensityMatrix::from_pure(ghz_class(need(p, "theta", "GhzClass"), need(p, "theta3", "GhzClass")));
       }},
      {"WClass",
       [](const ParamMap& p) {
         const auto a = w_amplitudes(p);
         return DensityMatrix::from_pure(a[0] * basis(8, 4) + a[1] * basis(8, 2) + a[2] * basis(8, 1));
       }},
      {"Werner3",
       [](const ParamMap& p) {
         const double v = need(p, "p", "Werner3");
         require_range(v, 0, 1, "p");
         return DensityMatrix::from_matrix(v * proj(ghz()) + (1 - v) * Eigen::MatrixXcd::Identity(8, 8) / 8.0);
       }},
      {"GhzWMix",
       [](const ParamMap& p) {
         const double v = need(p, "p", "GhzWMix");
         const double q = get(p, "q", 1.0 - v);
         require_range(v, 0, 1, "p");
         if (std::abs(v + q - 1.0) > kEps) throw Error(ErrorCode::BadWeights, "GhzWMix needs p + q = 1");
         return DensityMatrix::from_matrix(v * proj(ghz()) + q * proj(w_state()));
       }},
      {"BisepW",
       [](const ParamMap&) {
         const Eigen::MatrixXcd m = (proj(basis(8, 4) + basis(8, 2)) + proj(basis(8, 4) + basis(8, 1)) +
                                     proj(basis(8, 2) + basis(8, 1))) /
                                    3.0;
         return DensityMatrix::from_matrix(m);
       }},
  };
  return f;
}

}  // namespace

DensityMatrix make_state(const std::string& family, const ParamMap& params) {
  auto it = families().find(family);
  if (it == families().end()) throw Error(ErrorCode::UnknownName, "unknown state family '" + family + "'");
  return it->second(params);
}

std::vector<std::string> state_families() {
  std::vector<std::string> out;
  for (const auto& [k, v] : families()) out.push_back(k);
  return out;
}

EntanglementParams entanglement_params(const std::string& family, const ParamMap& p) {
  EntanglementParams e;
  if (family == "Schmidt" || family == "PsiPlus" || family == "Singlet") {
    const double s = family == "Schmidt" ? std::sin(2 * need(p, "theta", family)) : 1.0;
    e.concurrence = std::abs(s);
    e.tangle = s * s;
    return e;
  }
  if (family == "GGHZ" || family == "GHZ" || family == "GhzClass") {
    const double theta = family == "GHZ" ? std::numbers::pi / 4 : need(p, "theta", family);
    const double theta3 = family == "GhzClass" ? need(p, "theta3", family) : std::numbers::pi / 2;
    const double s = std::sin(2 * theta);
    e.threeTangle = std::pow(s * std::sin(theta3), 2);
    e.c12 = std::abs(s * std::cos(theta3));
    return e;
  }
  if (family == "WClass") {
    const auto a = w_amplitudes(p);
    e.c12 = 2 * a[0] * a[1];
    e.c13 = 2 * a[0] * a[2];
    e.c23 = 2 * a[1] * a[2];
    e.cAssistMin = std::min({e.c12, e.c13, e.c23});
    return e;
  }
  throw Error(ErrorCode::Unsupported, "entanglement parameters are only tabulated for the pure catalog families");
}

HardyCheck hardy_check(std::complex<double> b, std::complex<double> c, std::complex<double> d) {
  const double norm = std::sqrt(std::norm(b) + std::norm(c) + std::norm(d));
  if (norm < kEps) throw Error(ErrorCode::InvalidState, "zero Hardy state");
  b /= norm;
  c /= norm;
  d /= norm;
  hardy_probability(b, c, d);
  const double nbd = std::sqrt(std::norm(b) + std::norm(d));
  const double ncd = std::sqrt(std::norm(c) + std::norm(d));
  Eigen::Vector2cd aPlus(std::conj(d) / nbd, -std::conj(b) / nbd);
  Eigen::Vector2cd bPlus(std::conj(d) / ncd, -std::conj(c) / ncd);
  auto bloch = [](const Eigen::Vector2cd& v) {
    const cd a0 = v(0), a1 = v(1);
    return Vec3{2 * (std::conj(a0) * a1).real(), 2 * (std::conj(a0) * a1).imag(), std::norm(a0) - std::norm(a1)};
  };
  MeasurementSettings s{{{Vec3{0, 0, 1}, bloch(aPlus)}, {Vec3{0, 0, 1}, bloch(bPlus)}}};
  Eigen::VectorXcd psi = b * basis(4, 1) + c * basis(4, 2) + d * basis(4, 3);
  HardyCheck h;
  h.box = born_box2(DensityMatrix::from_pure(psi), s);
  h.h1 = h.box(0, 0, 0, 0);
  h.h2 = h.box(1, 0, 0, 1);
  h.h3 = h.box(0, 1, 1, 0);
  h.paradox = h.box(1, 1, 0, 0);
  return h;
}

}  // namespace boxlab
