#include <algorithm>
#include <cmath>
#include <optional>

#include "boxlab/discord2.hpp"
#include "boxlab/lp.hpp"
#include "boxlab/tribox.hpp"

namespace boxlab {

namespace {

using Table3 = std::array<double, TripartiteBox::kSize>;
using Corr3 = std::array<std::array<std::array<double, 2>, 2>, 2>;

int dot3(const std::array<int, 3>& f, int label) {
  return ((f[0] & (label >> 2)) ^ (f[1] & (label >> 1)) ^ (f[2] & label)) & 1;
}

double svetlichny_signed(const Corr3& E, int al, int be, int ga, int ep) {
  double s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        s += sgn_bit((i * j) ^ (i * k) ^ (j * k) ^ (al * i) ^ (be * j) ^ (ga * k) ^ ep) * E[i][j][k];
  return s;
}

double mermin3_signed(const Corr3& E, int al, int be, int ga, int ep) {
  if (((al ^ be ^ ga) & 1) == 0)
    return sgn_bit(ga ^ ep) * E[0][0][1] + sgn_bit(be ^ ep) * E[0][1][0] + sgn_bit(al ^ ep) * E[1][0][0] +
           sgn_bit(al ^ be ^ ga ^ ep ^ 1) * E[1][1][1];
  return sgn_bit(al ^ be ^ ep ^ 1) * E[1][1][0] + sgn_bit(al ^ ga ^ ep ^ 1) * E[1][0][1] +
         sgn_bit(be ^ ga ^ ep ^ 1) * E[0][1][1] + sgn_bit(ep) * E[0][0][0];
}

Corr3 triple_of(const TripartiteBox& P) {
  Corr3 E{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) E[i][j][k] = expectation3(P, i, j, k);
  return E;
}

Octet svetlichny_octet(const Corr3& E) {
  Octet o;
  for (int c = 0; c < 8; ++c) o.v[c] = std::abs(svetlichny_signed(E, (c >> 2) & 1, (c >> 1) & 1, c & 1, 0));
  return o;
}

std::vector<std::vector<double>> tables_of(const std::vector<TriVertexId>& ids) {
  std::vector<std::vector<double>> pts;
  pts.reserve(ids.size());
  for (const auto& id : ids) {
    const auto t = tri_vertex(id).data();
    pts.emplace_back(t.begin(), t.end());
  }
  return pts;
}

}  // namespace

double svetlichny_value(const TripartiteBox& P, int al, int be, int ga, int ep) {
  return svetlichny_signed(triple_of(P), al & 1, be & 1, ga & 1, ep & 1);
}

double mermin3_value(const TripartiteBox& P, int al, int be, int ga, int ep) {
  return mermin3_signed(triple_of(P), al & 1, be & 1, ga & 1, ep & 1);
}

Octet svetlichny_functions(const TripartiteBox& P) { return svetlichny_octet(triple_of(P)); }

Octet mermin3_functions(const TripartiteBox& P) {
  const Corr3 E = triple_of(P);
  Octet o;
  for (int c = 0; c < 8; ++c) o.v[c] = std::abs(mermin3_signed(E, (c >> 2) & 1, (c >> 1) & 1, c & 1, 0));
  return o;
}

double class99_value(const TripartiteBox& P) {
  return pair_expectation(P, Pair::AB, 0, 0) + pair_expectation(P, Pair::AC, 0, 0) +
         pair_expectation(P, Pair::BC, 1, 0) + expectation3(P, 1, 0, 1) - expectation3(P, 1, 1, 1);
}

std::string GroupingTree::name() const {
  auto s = [](const std::array<int, 3>& f) {
    return std::string{static_cast<char>('0' + f[0]), static_cast<char>('0' + f[1]), static_cast<char>('0' + f[2])};
  };
  return "outer" + s(outer) + "/inner" + s(middle);
}

const std::vector<GroupingTree>& grouping_set() {
  static const std::vector<GroupingTree> trees = [] {
    std::vector<GroupingTree> t;
    for (int bit = 0; bit < 3; ++bit) {
      std::array<int, 3> outer{};
      outer[bit] = 1;
      const int r1 = (bit + 1) % 3, r2 = (bit + 2) % 3;
      std::array<int, 3> m1{}, m2{}, m3{};
      m1[std::min(r1, r2)] = 1;
      m2[std::max(r1, r2)] = 1;
      m3[r1] = m3[r2] = 1;
      for (const auto& m : {m1, m2, m3}) t.push_back({outer, m});
    }
    return t;
  }();
  return trees;
}

double grouping_value(const Octet& s, const GroupingTree& tree) {
  double halves[2];
  for (int go = 0; go < 2; ++go) {
    double quarters[2];
    for (int gm = 0; gm < 2; ++gm) {
      double pair[2];
      int n = 0;
      for (int label = 0; label < 8; ++label)
        if (dot3(tree.outer, label) == go && dot3(tree.middle, label) == gm) pair[n++] = s.v[label];
      quarters[gm] = std::abs(pair[0] - pair[1]);
    }
    halves[go] = std::abs(quarters[0] - quarters[1]);
  }
  return std::abs(halves[0] - halves[1]);
}

std::vector<double> grouping_values(const Octet& s) {
  std::vector<double> out;
  for (const auto& t : grouping_set()) out.push_back(grouping_value(s, t));
  return out;
}

double grouping_min(const Octet& s) {
  const auto v = grouping_values(s);
  return *std::min_element(v.begin(), v.end());
}

double svetlichny_discord(const TripartiteBox& P) { return grouping_min(svetlichny_functions(P)); }
double mermin3_discord(const TripartiteBox& P) { return grouping_min(mermin3_functions(P)); }

double total_correlation3(const TripartiteBox& P) {
  const Expectations3 e = expectations(P);
  const Octet s = svetlichny_octet(e.triple);
  double best = 1e300;
  for (int cut = 0; cut < 3; ++cut) {
    Corr3 F{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          if (cut == 0) F[i][j][k] = e.single[0][i] * e.pair[2][j][k];
          else if (cut == 1) F[i][j][k] = e.single[1][j] * e.pair[1][i][k];
          else F[i][j][k] = e.pair[0][i][j] * e.single[2][k];
        }
    const Octet sc = svetlichny_octet(F);
    double worst = 0;
    for (int c = 0; c < 8; ++c) worst = std::max(worst, std::abs(s.v[c] - sc.v[c]));
    best = std::min(best, worst);
  }
  return best;
}

Measures3 measures3(const TripartiteBox& P) {
  Measures3 m;
  m.svetlichny = svetlichny_functions(P);
  m.mermin = mermin3_functions(P);
  m.G = grouping_min(m.svetlichny);
  m.Q = grouping_min(m.mermin);
  m.T = total_correlation3(P);
  const double d = m.T - m.G - m.Q;
  m.C = std::abs(d);
  m.cSign = m.C <= kEps ? 0 : (d > 0 ? 1 : -1);
  m.class99 = class99_value(P);
  return m;
}

MonogamyReport3 monogamy_checks3(const TripartiteBox& P) {
  MonogamyReport3 r;
  const Octet s = svetlichny_functions(P);
  r.discordSum = grouping_min(s) + 2.0 * mermin3_discord(P);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) r.svetlichnyPairMax = std::max(r.svetlichnyPairMax, s.v[i] + s.v[j]);
  const BipartiteBox ab = marginal2(P, Pair::AB);
  const BipartiteBox ac = marginal2(P, Pair::AC);
  r.marginalBell = bell_discord(ab) + bell_discord(ac);
  r.marginalMermin = mermin_discord(ab) + mermin_discord(ac);
  r.holds = r.discordSum <= 8.0 + kEps && r.svetlichnyPairMax <= 8.0 + kEps;
  r.marginalHolds = r.marginalBell <= 4.0 + kEps && r.marginalMermin <= 2.0 + kEps;
  return r;
}

bool ghz_paradox_check(const TripartiteBox& P, double tol) {
  return std::abs(expectation3(P, 0, 0, 0) - 1.0) <= tol && std::abs(expectation3(P, 0, 1, 1) + 1.0) <= tol &&
         std::abs(expectation3(P, 1, 0, 1) + 1.0) <= tol && std::abs(expectation3(P, 1, 1, 0) + 1.0) <= tol;
}

std::vector<TriVertexId> tri_vertex_set(TriVertexSet set) {
  std::vector<TriVertexId> ids;
  if (set == TriVertexSet::SvetlichnyPolytope128) ids = all_tri_vertex_ids(TriVertexKind::Sv);
  for (auto kind : {TriVertexKind::Det3, TriVertexKind::PrAB, TriVertexKind::PrAC, TriVertexKind::PrBC}) {
    const auto more = all_tri_vertex_ids(kind);
    ids.insert(ids.end(), more.begin(), more.end());
  }
  return ids;
}

std::vector<std::pair<TriVertexId, double>> lp_vertex_decomposition3(const TripartiteBox& P, TriVertexSet set) {
  const auto ids = tri_vertex_set(set);
  const ConvexFit fit = convex_weights(tables_of(ids), P.data());
  if (!fit.feasible) throw Error(ErrorCode::NotInPolytope, "box is outside the requested tripartite vertex hull");
  std::vector<std::pair<TriVertexId, double>> out;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (fit.weights[k] > 0) out.emplace_back(ids[k], fit.weights[k]);
  return out;
}

bool in_svetlichny_polytope(const TripartiteBox& P) {
  static const auto points = tables_of(tri_vertex_set(TriVertexSet::SvetlichnyPolytope128));
  return convex_weights(points, P.data()).feasible;
}

std::vector<TriVertexId> sv_labels_by_value(const TripartiteBox& P) {
  const Corr3 E = triple_of(P);
  auto ids = all_tri_vertex_ids(TriVertexKind::Sv);
  std::vector<double> val(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k)
    val[k] = svetlichny_signed(E, ids[k].bits[0], ids[k].bits[1], ids[k].bits[2], ids[k].bits[3]);
  std::vector<std::size_t> order(ids.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return val[i] > val[j] + kEps; });
  std::vector<TriVertexId> out;
  for (std::size_t k : order) out.push_back(ids[k]);
  return out;
}

namespace {

struct Component3 {
  double weight;
  const TripartiteBox* box;
};

Table3 subtract3(const TripartiteBox& P, std::initializer_list<Component3> parts) {
  Table3 t = P.data();
  for (const auto& c : parts)
    for (int i = 0; i < TripartiteBox::kSize; ++i) t[i] -= c.weight * c.box->data()[i];
  return t;
}

std::optional<TripartiteBox> residual_box3(const TripartiteBox& P, std::initializer_list<Component3> parts) {
  double rest = 1.0;
  for (const auto& c : parts) rest -= c.weight;
  Table3 t = subtract3(P, parts);
  for (double& v : t) v /= rest;
  if (!validate_table3(t, nullptr, kLpEps).empty()) return std::nullopt;
  for (double& v : t) v = std::max(v, 0.0);
  return make_box3_unchecked(t);
}

double reconstruction_error3(const TripartiteBox& P, const Decomposition3& r) {
  const TripartiteBox sv = tri_vertex(r.svId);
  const TripartiteBox mm = tri_vertex(r.merminId);
  double err = 0;
  for (int i = 0; i < TripartiteBox::kSize; ++i) {
    const double v = r.mu * sv.data()[i] + r.nu * mm.data()[i] + (1.0 - r.mu - r.nu) * r.residual.data()[i];
    err = std::max(err, std::abs(v - P.data()[i]));
  }
  return err;
}

std::array<int, 4> mermin3_operator_of(const TripartiteBox& M) {
  const Corr3 E = triple_of(M);
  for (int c = 0; c < 16; ++c) {
    const int al = (c >> 3) & 1, be = (c >> 2) & 1, ga = (c >> 1) & 1, ep = c & 1;
    if (mermin3_signed(E, al, be, ga, ep) > 4.0 - 1e-12) return {al, be, ga, ep};
  }
  throw Error(ErrorCode::InvalidVertex, "no tripartite Mermin operator saturates the box");
}

}  // namespace

Decomposition3 three_decomposition3(const TripartiteBox& P, bool checkPolytope) {
  if (checkPolytope && !in_svetlichny_polytope(P))
    throw Error(ErrorCode::NotInPolytope, "box is outside the Svetlichny-box polytope");
  Decomposition3 r;
  r.mu = svetlichny_discord(P) / 8.0;
  r.nu = mermin3_discord(P) / 4.0;

  const auto svLabels = sv_labels_by_value(P);
  const auto merminIds = all_tri_vertex_ids(TriVertexKind::Mermin3);
  std::vector<TripartiteBox> merminBoxes;
  std::vector<std::array<int, 4>> operators;
  std::vector<std::pair<TriVertexId, TriVertexId>> components;
  for (const auto& id : merminIds) {
    merminBoxes.push_back(tri_vertex(id));
    operators.push_back(mermin3_operator_of(merminBoxes.back()));
    const auto& b = id.bits;
    components.emplace_back(TriVertexId::sv(b[0], b[1], b[2], b[3]),
                            TriVertexId::sv(b[0] ^ 1, b[1] ^ 1, b[2] ^ 1, b[3] ^ b[0] ^ b[1] ^ b[2]));
  }

  bool first = true;
  for (const auto& svId : svLabels) {
    const TripartiteBox sv = tri_vertex(svId);
    const Corr3 diff = triple_of(make_box3_unchecked(subtract3(P, {{r.mu, &sv}})));
    auto rank = [&](std::size_t k) {
      const bool canonical = components[k].first == svId || components[k].second == svId;
      const auto& op = operators[k];
      return std::make_pair(canonical ? 0 : 1, -mermin3_signed(diff, op[0], op[1], op[2], op[3]));
    };
    std::vector<std::size_t> order(merminIds.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      const auto a = rank(i), b = rank(j);
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second - kEps;
    });
    for (std::size_t k : order) {
      const TripartiteBox& mm = merminBoxes[k];
      r.svId = svId;
      r.merminId = merminIds[k];
      r.method = first ? "canonical" : "frame-search";
      first = false;
      if (r.mu + r.nu >= 1.0 - kEps) {
        r.degenerate = true;
        r.residual = r.nu > r.mu ? mm : sv;
        if (reconstruction_error3(P, r) <= kLpEps) {
          r.reconstructionError = reconstruction_error3(P, r);
          return r;
        }
        continue;
      }
      auto res = residual_box3(P, {{r.mu, &sv}, {r.nu, &mm}});
      if (res && svetlichny_discord(*res) <= kDiscordZero && mermin3_discord(*res) <= kDiscordZero) {
        r.residual = *res;
        r.reconstructionError = reconstruction_error3(P, r);
        return r;
      }
    }
  }
  throw Error(ErrorCode::ResidualInvalid,
              "no Svetlichny/Mermin frame yields a residual with zero Svetlichny and Mermin discord");
}

}  // namespace boxlab
