#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boxlab/box.hpp"

namespace boxlab {

enum class VertexSet { NonSignaling24, Deterministic16 };

std::vector<VertexId> vertex_set(VertexSet set);

struct MembershipResult {
  bool inside = false;
  std::vector<std::pair<VertexId, double>> weights;
  std::string violatedFacet;
  double margin = 0;
};

// Local polytope membership by LP over the 16 deterministic boxes; when outside, reports the
// most violated Bell-CHSH facet B_{abc} <= 2 and the amount by which it is exceeded.
MembershipResult is_local(const BipartiteBox& P);

// Local polytope membership via the eight CHSH inequalities.
bool chsh_local(const BipartiteBox& P, double tol = kEps);

bool ns_membership(const BipartiteBox& P);

// Convex weights over the named vertex set; throws NotInPolytope when infeasible.
std::vector<std::pair<VertexId, double>> lp_vertex_decomposition(const BipartiteBox& P, VertexSet set);

enum class DecompositionStatus { Ok, DegenerateMu };

struct DecompositionResult {
  double mu = 0;
  double nu = 0;
  VertexId prId;
  VertexId merminId;
  BipartiteBox residual;
  DecompositionStatus status = DecompositionStatus::Ok;
  // "canonical", "frame-search" or "bisection".
  std::string method = "canonical";
  double reconstructionError = 0;
};

// PR labels sorted by descending signed CHSH value, ties broken lexicographically.
std::vector<VertexId> pr_labels_by_chsh(const BipartiteBox& P);

// The two PR labels whose equal mixture is the given MerminMM box.
std::pair<VertexId, VertexId> mermin_components(const VertexId& merminId);

DecompositionResult canonical_2decomposition(const BipartiteBox& P);
DecompositionResult three_decomposition(const BipartiteBox& P);

}  // namespace boxlab
