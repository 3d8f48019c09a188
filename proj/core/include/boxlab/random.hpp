#pragma once

#include <cstdint>
#include <random>

#include "boxlab/box.hpp"
#include "boxlab/qstate.hpp"
#include "boxlab/tribox.hpp"

namespace boxlab {

// Seeded sampler for property tests and sweeps; every draw derives from one mt19937_64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  double exponential() { return std::exponential_distribution<double>(1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Picks k uniformly in [1, 24] distinct vertices of the bipartite NS polytope and mixes them
// with normalized exponential weights.
BipartiteBox random_ns_box(Rng& rng);
// Mixture of 1..maxTerms distinct deterministic boxes with normalized exponential weights.
BipartiteBox random_local_mixture(Rng& rng, int maxTerms = 4);
// Same scheme over the 128 vertices of the Svetlichny-box polytope.
TripartiteBox random_svetlichny_polytope_box(Rng& rng);

Vec3 random_unit(Rng& rng);
MeasurementSettings random_settings(Rng& rng, int parties);

// Haar-like pure states from normalized complex Gaussian amplitudes.
DensityMatrix random_pure_state(Rng& rng, int qubits);
// Mixture of 1..4 random pure states with normalized exponential weights.
DensityMatrix random_mixed_state(Rng& rng, int qubits);
// Random orthonormal basis on one side and random single-qubit states on the other.
DensityMatrix random_cq_state(Rng& rng);
DensityMatrix random_qc_state(Rng& rng);
// Tripartite analog: party A classical in a random basis, BC an arbitrary two-qubit state.
DensityMatrix random_cq3_state(Rng& rng);

ParamMap random_bell_diagonal_weights(Rng& rng);

}  // namespace boxlab
