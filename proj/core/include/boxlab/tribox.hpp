#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/box.hpp"

namespace boxlab {

// Conditional distribution P(a,b,c|x,y,z) stored row-major as [x][y][z][a][b][c].
class TripartiteBox {
 public:
  static constexpr int kSize = 64;

  static int index(int x, int y, int z, int a, int b, int c) {
    return (((((x * 2 + y) * 2 + z) * 2 + a) * 2 + b) * 2) + c;
  }

  double operator()(int x, int y, int z, int a, int b, int c) const { return p_[index(x, y, z, a, b, c)]; }
  const std::array<double, kSize>& data() const { return p_; }

  bool operator==(const TripartiteBox&) const = default;

 private:
  friend TripartiteBox make_box3(std::span<const double> p, double tol);
  friend TripartiteBox make_box3_unchecked(const std::array<double, kSize>& p);
  std::array<double, kSize> p_{};
};

TripartiteBox make_box3(std::span<const double> p, double tol = kEps);
TripartiteBox make_box3_unchecked(const std::array<double, TripartiteBox::kSize>& p);
std::string validate_table3(std::span<const double> p, ErrorCode* code = nullptr, double tol = kEps);

enum class TriVertexKind { Sv, Det3, PrAB, PrAC, PrBC, Mermin3, Class8Rep, Noise3 };

struct TriVertexId {
  TriVertexKind kind = TriVertexKind::Noise3;
  // Sv, Mermin3: (alpha, beta, gamma, epsilon). Det3: (alpha, beta, gamma, epsilon, zeta, eta).
  // PrAB/PrAC/PrBC: PR label (alpha, beta, gamma) of the pair, epsilon for the third party's response o = epsilon*k.
  std::array<int, 6> bits{};

  static TriVertexId sv(int alpha, int beta, int gamma, int epsilon);
  static TriVertexId det3(int alpha, int beta, int gamma, int epsilon, int zeta, int eta);
  static TriVertexId pr_pair(TriVertexKind pairKind, int alpha, int beta, int gamma, int epsilon);
  static TriVertexId mermin3(int alpha, int beta, int gamma, int epsilon);
  static TriVertexId class8();
  static TriVertexId noise3();

  std::string label() const;
  bool operator==(const TriVertexId&) const = default;
};

TriVertexId parse_tri_vertex_id(const std::string& label);
TripartiteBox tri_vertex(const TriVertexId& id);
std::vector<TriVertexId> all_tri_vertex_ids(TriVertexKind kind);

TripartiteBox mix3(std::span<const TripartiteBox> boxes, std::span<const double> weights);

enum class Party3 { A, B, C };
enum class Pair { AB, AC, BC };

double expectation3(const TripartiteBox& P, int i, int j, int k);
double pair_expectation(const TripartiteBox& P, Pair pair, int i, int j);
double single_expectation(const TripartiteBox& P, Party3 party, int i);

// The 26 expectation coordinates: 6 single-party, 12 two-party, 8 three-party.
struct Expectations3 {
  std::array<std::array<double, 2>, 3> single{};              // [party][input]
  std::array<std::array<std::array<double, 2>, 2>, 3> pair{};  // [AB, AC, BC][first input][second input]
  std::array<std::array<std::array<double, 2>, 2>, 2> triple{};
};
Expectations3 expectations(const TripartiteBox& P);
std::array<double, TripartiteBox::kSize> table_from_expectations(const Expectations3& e);

BipartiteBox marginal2(const TripartiteBox& P, Pair pair);

// Eight values indexed by (alpha, beta, gamma) as 4*alpha + 2*beta + gamma.
struct Octet {
  std::array<double, 8> v{};
  double operator()(int alpha, int beta, int gamma) const { return v[4 * alpha + 2 * beta + gamma]; }
  double& operator()(int alpha, int beta, int gamma) { return v[4 * alpha + 2 * beta + gamma]; }
};

double svetlichny_value(const TripartiteBox& P, int alpha, int beta, int gamma, int epsilon);
double mermin3_value(const TripartiteBox& P, int alpha, int beta, int gamma, int epsilon);
Octet svetlichny_functions(const TripartiteBox& P);
Octet mermin3_functions(const TripartiteBox& P);
double class99_value(const TripartiteBox& P);

// One nested absolute-difference tree over the eight labels. Labels are split by the parity
// <outer, v>, each half split by <middle, v>, and each quarter is a pair to difference.
struct GroupingTree {
  std::array<int, 3> outer{};
  std::array<int, 3> middle{};
  std::string name() const;
};

// Nine trees: the outer split by one coordinate bit, and the inner pairing in each half by
// either remaining bit or by their parity.
const std::vector<GroupingTree>& grouping_set();
double grouping_value(const Octet& s, const GroupingTree& tree);
std::vector<double> grouping_values(const Octet& s);
double grouping_min(const Octet& s);

double svetlichny_discord(const TripartiteBox& P);
double mermin3_discord(const TripartiteBox& P);

double total_correlation3(const TripartiteBox& P);

struct Measures3 {
  double G = 0, Q = 0, T = 0;
  double C = 0;
  int cSign = 0;
  Octet svetlichny;
  Octet mermin;
  double class99 = 0;
};
Measures3 measures3(const TripartiteBox& P);

struct MonogamyReport3 {
  double discordSum = 0;        // G + 2Q, bound 8
  double svetlichnyPairMax = 0;  // max S_i + S_j, bound 8
  double marginalBell = 0;      // G_AB + G_AC, bound 4 (quantum-only expectation)
  double marginalMermin = 0;    // Q_AB + Q_AC, bound 2 (quantum-only expectation)
  bool holds = true;            // the two hard relations
  bool marginalHolds = true;    // reported only
};
MonogamyReport3 monogamy_checks3(const TripartiteBox& P);

bool ghz_paradox_check(const TripartiteBox& P, double tol = kEps);

enum class TriVertexSet { TwoWayLocal112, SvetlichnyPolytope128 };
std::vector<TriVertexId> tri_vertex_set(TriVertexSet set);
std::vector<std::pair<TriVertexId, double>> lp_vertex_decomposition3(const TripartiteBox& P, TriVertexSet set);
bool in_svetlichny_polytope(const TripartiteBox& P);

struct Decomposition3 {
  double mu = 0;
  double nu = 0;
  TriVertexId svId;
  TriVertexId merminId;
  TripartiteBox residual;
  bool degenerate = false;
  std::string method = "canonical";
  double reconstructionError = 0;
};

// Sv labels sorted by descending signed Svetlichny value, ties broken lexicographically.
std::vector<TriVertexId> sv_labels_by_value(const TripartiteBox& P);

// Throws NotInPolytope when the box is outside the Svetlichny-box polytope, ResidualInvalid when
// no Svetlichny/Mermin frame yields a residual with zero discords.
Decomposition3 three_decomposition3(const TripartiteBox& P, bool checkPolytope = true);

// Local relabelings for each party followed by a permutation of the parties: party k of the
// input box becomes party perm[k] of the output box.
struct Lro3 {
  std::array<LocalRelabel, 3> local{};
  std::array<int, 3> perm{0, 1, 2};

  static constexpr int kOrder = 512 * 6;
  static Lro3 from_code(int c);
};
TripartiteBox apply_lro3(const TripartiteBox& P, const Lro3& g);

}  // namespace boxlab
