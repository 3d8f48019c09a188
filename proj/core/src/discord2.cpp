#include "boxlab/discord2.hpp"

#include <algorithm>
#include <cmath>

namespace boxlab {

namespace {

using Corr = std::array<std::array<double, 2>, 2>;

double bell_inner(const Corr& E, int alpha, int beta) {
  return E[0][0] + sgn_bit(beta) * E[0][1] + sgn_bit(alpha) * E[1][0] + sgn_bit(alpha ^ beta ^ 1) * E[1][1];
}

double mermin_inner(const Corr& E, int alpha, int beta) {
  if (beta == 0) return alpha == 0 ? E[0][0] - E[1][1] : E[0][0] + E[1][1];
  return alpha == 0 ? E[0][1] - E[1][0] : E[0][1] + E[1][0];
}

Quad bell_quad(const Corr& E) {
  Quad q;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) q(al, be) = std::abs(bell_inner(E, al, be));
  return q;
}

Corr product_correlators(const BipartiteBox& P) {
  Corr E{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      E[x][y] = marginal_expectation(P, Party::A, x) * marginal_expectation(P, Party::B, y);
  return E;
}

}  // namespace

BellFunctions bell_functions(const BipartiteBox& P) { return bell_quad(correlators(P)); }

MerminFunctions mermin_functions(const BipartiteBox& P) {
  const Corr E = correlators(P);
  Quad q;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) q(al, be) = std::abs(mermin_inner(E, al, be));
  return q;
}

std::array<double, 3> pairing_terms(const Quad& q) {
  const double a = q.v[0], b = q.v[1], c = q.v[2], d = q.v[3];
  return {std::abs(std::abs(a - b) - std::abs(c - d)), std::abs(std::abs(a - c) - std::abs(b - d)),
          std::abs(std::abs(a - d) - std::abs(b - c))};
}

double pairing_min(const Quad& q) {
  const auto t = pairing_terms(q);
  return std::min({t[0], t[1], t[2]});
}

double bell_discord(const BipartiteBox& P) { return pairing_min(bell_functions(P)); }
double mermin_discord(const BipartiteBox& P) { return pairing_min(mermin_functions(P)); }

double chsh_value(const BipartiteBox& P, int alpha, int beta, int gamma) {
  return sgn_bit(gamma) * bell_inner(correlators(P), alpha & 1, beta & 1);
}

double mermin_value(const BipartiteBox& P, int alpha, int beta, int gamma) {
  return sgn_bit(gamma) * mermin_inner(correlators(P), alpha & 1, beta & 1);
}

std::array<bool, 4> steering_check(const BipartiteBox& P) {
  const Quad m = mermin_functions(P);
  std::array<bool, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = m.v[i] > std::sqrt(2.0) + kEps;
  return out;
}

double total_correlation(const BipartiteBox& P) {
  const Quad b = bell_quad(correlators(P));
  const Quad bp = bell_quad(product_correlators(P));
  double t = 0;
  for (int i = 0; i < 4; ++i) t = std::max(t, std::abs(b.v[i] - bp.v[i]));
  return t;
}

ClassicalCorrelation classical_correlation(const BipartiteBox& P) {
  const double d = total_correlation(P) - bell_discord(P) - mermin_discord(P);
  ClassicalCorrelation c;
  c.value = std::abs(d);
  c.sign = c.value <= kEps ? 0 : (d > 0 ? 1 : -1);
  return c;
}

MonogamyReport2 monogamy_checks(const BipartiteBox& P) {
  MonogamyReport2 r;
  const Quad b = bell_functions(P);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) r.bellPairMax = std::max(r.bellPairMax, b.v[i] + b.v[j]);
  r.bellMargin = 4.0 - r.bellPairMax;
  r.discordSum = bell_discord(P) + 2.0 * mermin_discord(P);
  r.discordMargin = 4.0 - r.discordSum;
  r.holds = r.bellMargin >= -kEps && r.discordMargin >= -kEps;
  return r;
}

Measures2 measures(const BipartiteBox& P) {
  Measures2 m;
  m.bell = bell_functions(P);
  m.mermin = mermin_functions(P);
  m.G = pairing_min(m.bell);
  m.Q = pairing_min(m.mermin);
  m.T = total_correlation(P);
  const double d = m.T - m.G - m.Q;
  m.C.value = std::abs(d);
  m.C.sign = m.C.value <= kEps ? 0 : (d > 0 ? 1 : -1);
  return m;
}

}  // namespace boxlab
