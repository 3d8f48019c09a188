#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "boxlab/common.hpp"

namespace boxlab {

// Conditional distribution P(a,b|x,y) stored row-major as [x][y][a][b].
// In matrix notation row (x,y) and column (a,b) both run over 00,01,10,11.
class BipartiteBox {
 public:
  static constexpr int kSize = 16;

  static int index(int x, int y, int a, int b) { return (((x * 2 + y) * 2 + a) * 2) + b; }

  double operator()(int x, int y, int a, int b) const { return p_[index(x, y, a, b)]; }
  const std::array<double, kSize>& data() const { return p_; }

  bool operator==(const BipartiteBox&) const = default;

 private:
  friend BipartiteBox make_box(std::span<const double> p, double tol);
  friend BipartiteBox make_box_unchecked(const std::array<double, kSize>& p);
  std::array<double, kSize> p_{};
};

// Validates normalization, nonnegativity and nonsignaling; entries in (-eps, 0) are clamped.
BipartiteBox make_box(std::span<const double> p, double tol = kEps);
BipartiteBox make_box_unchecked(const std::array<double, BipartiteBox::kSize>& p);

// Returns an empty string when the table is a valid box, otherwise a diagnostic.
std::string validate_table(std::span<const double> p, ErrorCode* code = nullptr, double tol = kEps);

enum class VertexKind { PR, Det, MerminMM, MerminNMM, CC, Tsirelson, Noise };

struct VertexId {
  VertexKind kind = VertexKind::Noise;
  // PR, MerminMM, CC, Tsirelson: (alpha, beta, gamma). Det: (alpha, beta, gamma, epsilon).
  // MerminNMM: index = 16*variant + 8*alpha + 4*beta + 2*gamma + epsilon.
  std::array<int, 4> bits{};
  int index = 0;

  static VertexId pr(int alpha, int beta, int gamma);
  static VertexId det(int alpha, int beta, int gamma, int epsilon);
  static VertexId mermin_mm(int alpha, int beta, int gamma);
  static VertexId mermin_nmm(int index);
  static VertexId cc(int alpha, int beta, int gamma);
  static VertexId tsirelson(int alpha, int beta, int gamma);
  static VertexId noise();

  std::string label() const;
  bool operator==(const VertexId&) const = default;
};

VertexId parse_vertex_id(const std::string& label);

BipartiteBox vertex(const VertexId& id);
std::vector<VertexId> all_vertex_ids(VertexKind kind);

BipartiteBox mix(std::span<const BipartiteBox> boxes, std::span<const double> weights);
BipartiteBox isotropic(const BipartiteBox& extremal, double p);

double joint_expectation(const BipartiteBox& P, int x, int y);

enum class Party { A, B };
double marginal_expectation(const BipartiteBox& P, Party party, int input);
double marginal_probability(const BipartiteBox& P, Party party, int input, int output);

// Correlator matrix E[x][y].
std::array<std::array<double, 2>, 2> correlators(const BipartiteBox& P);

double max_abs_diff(const BipartiteBox& P, const BipartiteBox& Q);

// Local reversible operation: per party (x,m) -> (x ^ inputFlip, m ^ outputFlipByInput*x ^ outputFlipConst),
// applied before an optional exchange of the two parties.
struct LocalRelabel {
  int inputFlip = 0;
  int outputFlipConst = 0;
  int outputFlipByInput = 0;

  int code() const { return inputFlip * 4 + outputFlipConst * 2 + outputFlipByInput; }
  static LocalRelabel from_code(int c) { return {(c >> 2) & 1, (c >> 1) & 1, c & 1}; }
  LocalRelabel then(const LocalRelabel& next) const;
  LocalRelabel inverse() const;
  bool operator==(const LocalRelabel&) const = default;
};

struct Lro {
  bool partySwap = false;
  LocalRelabel alice;
  LocalRelabel bob;

  static Lro identity() { return {}; }
  int code() const { return (partySwap ? 64 : 0) + alice.code() * 8 + bob.code(); }
  static Lro from_code(int c);
  bool operator==(const Lro&) const = default;
};

const std::vector<Lro>& lro_group();
Lro compose(const Lro& first, const Lro& second);
Lro inverse(const Lro& g);
BipartiteBox apply_lro(const BipartiteBox& P, const Lro& g);

}  // namespace boxlab
