#pragma once

#include <array>

#include "boxlab/box.hpp"

namespace boxlab {

// Four non-negative values indexed by (alpha, beta) as 2*alpha + beta.
struct Quad {
  std::array<double, 4> v{};
  double operator()(int alpha, int beta) const { return v[2 * alpha + beta]; }
  double& operator()(int alpha, int beta) { return v[2 * alpha + beta]; }
};

using BellFunctions = Quad;
using MerminFunctions = Quad;

BellFunctions bell_functions(const BipartiteBox& P);
MerminFunctions mermin_functions(const BipartiteBox& P);

// The three pairings ||v_i - v_j| - |v_k - v_l|| over the partitions of {00,01,10,11}.
std::array<double, 3> pairing_terms(const Quad& q);
double pairing_min(const Quad& q);

double bell_discord(const BipartiteBox& P);
double mermin_discord(const BipartiteBox& P);

// Signed Bell-CHSH operator B_{alpha beta gamma}.
double chsh_value(const BipartiteBox& P, int alpha, int beta, int gamma);
// Signed Mermin operator (-1)^gamma times the inner expression of m[alpha beta].
double mermin_value(const BipartiteBox& P, int alpha, int beta, int gamma);

// Flag per (alpha, beta): the Mermin function exceeds the local-hidden-state bound sqrt(2).
std::array<bool, 4> steering_check(const BipartiteBox& P);

double total_correlation(const BipartiteBox& P);

struct ClassicalCorrelation {
  double value = 0;
  // +1 when T > G + Q, -1 when T < G + Q, 0 when they coincide within eps.
  int sign = 0;
};
ClassicalCorrelation classical_correlation(const BipartiteBox& P);

struct MonogamyReport2 {
  double bellPairMax = 0;      // max over pairs of B_i + B_j
  double bellMargin = 0;       // 4 - bellPairMax
  double discordSum = 0;       // G + 2Q
  double discordMargin = 0;    // 4 - discordSum
  bool holds = true;
};
MonogamyReport2 monogamy_checks(const BipartiteBox& P);

struct Measures2 {
  double G = 0, Q = 0, T = 0;
  ClassicalCorrelation C;
  BellFunctions bell;
  MerminFunctions mermin;
};
Measures2 measures(const BipartiteBox& P);

}  // namespace boxlab
