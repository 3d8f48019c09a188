#include "boxlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boxlab/polytope.hpp"

namespace boxlab {

namespace {

std::vector<double> exp_weights(Rng& rng, std::size_t k) {
  std::vector<double> w(k);
  double s = 0;
  for (double& v : w) s += (v = rng.exponential());
  for (double& v : w) v /= s;
  return w;
}

std::vector<std::size_t> pick(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng.engine());
  idx.resize(k);
  return idx;
}

Eigen::Matrix2cd bloch_state(const Vec3& r) {
  Eigen::Matrix2cd m;
  m << 1 + r[2], std::complex<double>(r[0], -r[1]), std::complex<double>(r[0], r[1]), 1 - r[2];
  return 0.5 * m;
}

Vec3 random_ball(Rng& rng) {
  const Vec3 u = random_unit(rng);
  const double len = std::cbrt(rng.uniform());
  return {len * u[0], len * u[1], len * u[2]};
}

}  // namespace

BipartiteBox random_ns_box(Rng& rng) {
  static const auto ids = vertex_set(VertexSet::NonSignaling24);
  const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(ids.size())));
  const auto chosen = pick(rng, ids.size(), k);
  const auto w = exp_weights(rng, k);
  std::array<double, BipartiteBox::kSize> t{};
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = vertex(ids[chosen[i]]).data();
    for (int e = 0; e < BipartiteBox::kSize; ++e) t[e] += w[i] * v[e];
  }
  return make_box(t);
}

BipartiteBox random_local_mixture(Rng& rng, int maxTerms) {
  static const auto ids = all_vertex_ids(VertexKind::Det);
  const auto k = static_cast<std::size_t>(rng.integer(1, maxTerms));
  const auto chosen = pick(rng, ids.size(), k);
  const auto w = exp_weights(rng, k);
  std::array<double, BipartiteBox::kSize> t{};
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = vertex(ids[chosen[i]]).data();
    for (int e = 0; e < BipartiteBox::kSize; ++e) t[e] += w[i] * v[e];
  }
  return make_box(t);
}

TripartiteBox random_svetlichny_polytope_box(Rng& rng) {
  static const auto ids = tri_vertex_set(TriVertexSet::SvetlichnyPolytope128);
  const auto k = static_cast<std::size_t>(rng.integer(1, 12));
  const auto chosen = pick(rng, ids.size(), k);
  const auto w = exp_weights(rng, k);
  std::array<double, TripartiteBox::kSize> t{};
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = tri_vertex(ids[chosen[i]]).data();
    for (int e = 0; e < TripartiteBox::kSize; ++e) t[e] += w[i] * v[e];
  }
  return make_box3(t);
}

Vec3 random_unit(Rng& rng) {
  for (;;) {
    const Vec3 g{rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (n > 1e-6) return {g[0] / n, g[1] / n, g[2] / n};
  }
}

MeasurementSettings random_settings(Rng& rng, int parties) {
  MeasurementSettings s;
  for (int q = 0; q < parties; ++q) s.parties.push_back({random_unit(rng), random_unit(rng)});
  return s;
}

DensityMatrix random_pure_state(Rng& rng, int qubits) {
  const int dim = 1 << qubits;
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(rng.normal(), rng.normal());
  return DensityMatrix::from_pure(v);
}

DensityMatrix random_mixed_state(Rng& rng, int qubits) {
  const int dim = 1 << qubits;
  const auto k = static_cast<std::size_t>(rng.integer(1, 4));
  const auto w = exp_weights(rng, k);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < k; ++i) m += w[i] * random_pure_state(rng, qubits).matrix();
  return DensityMatrix::from_matrix(m);
}

DensityMatrix random_cq_state(Rng& rng) {
  return cq_state(rng.uniform(), random_unit(rng), random_ball(rng), random_ball(rng));
}

DensityMatrix random_qc_state(Rng& rng) {
  return qc_state(rng.uniform(), random_unit(rng), random_ball(rng), random_ball(rng));
}

DensityMatrix random_cq3_state(Rng& rng) {
  const Vec3 n = random_unit(rng);
  const double p0 = rng.uniform();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 2; ++i) {
    const Eigen::Matrix2cd pa = bloch_state(i == 0 ? n : Vec3{-n[0], -n[1], -n[2]});
    const Eigen::MatrixXcd bc = random_mixed_state(rng, 2).matrix();
    const double w = i == 0 ? p0 : 1 - p0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.block(4 * r, 4 * c, 4, 4) += w * pa(r, c) * bc;
  }
  return DensityMatrix::from_matrix(m);
}

ParamMap random_bell_diagonal_weights(Rng& rng) {
  const auto w = exp_weights(rng, 8);
  ParamMap p;
  for (int k = 0; k < 8; ++k) p["w" + std::to_string(k)] = w[k];
  return p;
}

}  // namespace boxlab
