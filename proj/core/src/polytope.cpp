#include "boxlab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "boxlab/discord2.hpp"
#include "boxlab/lp.hpp"

namespace boxlab {

namespace {

using Table = std::array<double, BipartiteBox::kSize>;

std::vector<std::vector<double>> tables_of(const std::vector<VertexId>& ids) {
  std::vector<std::vector<double>> pts;
  pts.reserve(ids.size());
  for (const auto& id : ids) {
    const auto t = vertex(id).data();
    pts.emplace_back(t.begin(), t.end());
  }
  return pts;
}

struct Component {
  double weight;
  const BipartiteBox* box;
};

Table subtract(const BipartiteBox& P, std::initializer_list<Component> parts) {
  Table t = P.data();
  for (const auto& c : parts)
    for (int i = 0; i < BipartiteBox::kSize; ++i) t[i] -= c.weight * c.box->data()[i];
  return t;
}

std::optional<BipartiteBox> residual_box(const BipartiteBox& P, std::initializer_list<Component> parts) {
  double rest = 1.0;
  for (const auto& c : parts) rest -= c.weight;
  Table t = subtract(P, parts);
  for (double& v : t) v /= rest;
  if (!validate_table(t, nullptr, kLpEps).empty()) return std::nullopt;
  for (double& v : t) v = std::max(v, 0.0);
  return make_box_unchecked(t);
}

double reconstruction_error(const BipartiteBox& P, const DecompositionResult& r) {
  const BipartiteBox pr = vertex(r.prId);
  const BipartiteBox mm = vertex(r.merminId);
  double err = 0;
  for (int i = 0; i < BipartiteBox::kSize; ++i) {
    const double v = r.mu * pr.data()[i] + r.nu * mm.data()[i] + (1.0 - r.mu - r.nu) * r.residual.data()[i];
    err = std::max(err, std::abs(v - P.data()[i]));
  }
  return err;
}

// The signed Mermin operator (alpha, beta, gamma) that attains +2 on the given MerminMM box.
std::array<int, 3> mermin_operator_of(const VertexId& merminId) {
  const BipartiteBox M = vertex(merminId);
  for (int c = 0; c < 8; ++c) {
    const int al = (c >> 2) & 1, be = (c >> 1) & 1, ga = c & 1;
    if (mermin_value(M, al, be, ga) > 2.0 - 1e-12) return {al, be, ga};
  }
  throw Error(ErrorCode::InvalidVertex, "no Mermin operator saturates " + merminId.label());
}

}  // namespace

std::vector<VertexId> vertex_set(VertexSet set) {
  std::vector<VertexId> ids;
  if (set == VertexSet::NonSignaling24) ids = all_vertex_ids(VertexKind::PR);
  const auto dets = all_vertex_ids(VertexKind::Det);
  ids.insert(ids.end(), dets.begin(), dets.end());
  return ids;
}

bool chsh_local(const BipartiteBox& P, double tol) {
  for (int c = 0; c < 8; ++c)
    if (chsh_value(P, (c >> 2) & 1, (c >> 1) & 1, c & 1) > 2.0 + tol) return false;
  return true;
}

MembershipResult is_local(const BipartiteBox& P) {
  MembershipResult r;
  const auto ids = vertex_set(VertexSet::Deterministic16);
  const ConvexFit fit = convex_weights(tables_of(ids), P.data());
  r.inside = fit.feasible;
  if (r.inside) {
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (fit.weights[k] > 0) r.weights.emplace_back(ids[k], fit.weights[k]);
    return r;
  }
  double best = -1e300;
  for (int c = 0; c < 8; ++c) {
    const int al = (c >> 2) & 1, be = (c >> 1) & 1, ga = c & 1;
    const double v = chsh_value(P, al, be, ga);
    if (v > best + 1e-15) {
      best = v;
      r.violatedFacet = "CHSH" + std::to_string(al) + std::to_string(be) + std::to_string(ga);
    }
  }
  r.margin = best - 2.0;
  return r;
}

bool ns_membership(const BipartiteBox& P) {
  return convex_weights(tables_of(vertex_set(VertexSet::NonSignaling24)), P.data()).feasible;
}

std::vector<std::pair<VertexId, double>> lp_vertex_decomposition(const BipartiteBox& P, VertexSet set) {
  const auto ids = vertex_set(set);
  const ConvexFit fit = convex_weights(tables_of(ids), P.data());
  if (!fit.feasible) throw Error(ErrorCode::NotInPolytope, "box is outside the requested vertex hull");
  std::vector<std::pair<VertexId, double>> out;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (fit.weights[k] > 0) out.emplace_back(ids[k], fit.weights[k]);
  return out;
}

std::vector<VertexId> pr_labels_by_chsh(const BipartiteBox& P) {
  auto ids = all_vertex_ids(VertexKind::PR);
  std::vector<double> val(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) val[k] = chsh_value(P, ids[k].bits[0], ids[k].bits[1], ids[k].bits[2]);
  std::vector<std::size_t> order(ids.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return val[i] > val[j] + kEps; });
  std::vector<VertexId> out;
  for (std::size_t k : order) out.push_back(ids[k]);
  return out;
}

std::pair<VertexId, VertexId> mermin_components(const VertexId& merminId) {
  const BipartiteBox M = vertex(merminId);
  std::vector<VertexId> found;
  for (const auto& id : all_vertex_ids(VertexKind::PR)) {
    const BipartiteBox pr = vertex(id);
    bool ok = true;
    for (int i = 0; i < BipartiteBox::kSize && ok; ++i) ok = 2.0 * M.data()[i] - pr.data()[i] >= -kEps;
    if (ok) found.push_back(id);
  }
  if (found.size() != 2) throw Error(ErrorCode::InvalidVertex, merminId.label() + " is not a mixture of two PR boxes");
  return {found[0], found[1]};
}

DecompositionResult canonical_2decomposition(const BipartiteBox& P) {
  DecompositionResult r;
  r.mu = bell_discord(P) / 4.0;
  r.merminId = VertexId::mermin_mm(0, 0, 0);
  const auto labels = pr_labels_by_chsh(P);
  r.prId = labels.front();
  if (r.mu >= 1.0 - kEps) {
    r.mu = 1.0;
    r.status = DecompositionStatus::DegenerateMu;
    r.residual = vertex(r.prId);
    r.reconstructionError = reconstruction_error(P, r);
    return r;
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const BipartiteBox pr = vertex(labels[k]);
    auto res = residual_box(P, {{r.mu, &pr}});
    if (res && bell_discord(*res) <= kDiscordZero) {
      r.prId = labels[k];
      r.residual = *res;
      r.method = k == 0 ? "canonical" : "frame-search";
      r.reconstructionError = reconstruction_error(P, r);
      return r;
    }
  }
  const BipartiteBox pr = vertex(r.prId);
  double lo = 0.0, hi = r.mu;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual_box(P, {{mid, &pr}})) lo = mid;
    else hi = mid;
  }
  auto res = residual_box(P, {{lo, &pr}});
  if (!res || bell_discord(*res) > kDiscordZero)
    throw Error(ErrorCode::ResidualInvalid, "no PR label yields a valid residual with zero Bell discord");
  r.mu = lo;
  r.residual = *res;
  r.method = "bisection";
  r.reconstructionError = reconstruction_error(P, r);
  return r;
}

DecompositionResult three_decomposition(const BipartiteBox& P) {
  DecompositionResult r;
  r.mu = bell_discord(P) / 4.0;
  r.nu = mermin_discord(P) / 2.0;
  const auto labels = pr_labels_by_chsh(P);
  const auto merminIds = all_vertex_ids(VertexKind::MerminMM);
  std::vector<std::array<int, 3>> operators;
  std::vector<std::pair<VertexId, VertexId>> components;
  for (const auto& id : merminIds) {
    operators.push_back(mermin_operator_of(id));
    components.push_back(mermin_components(id));
  }

  bool first = true;
  for (const auto& prId : labels) {
    const BipartiteBox pr = vertex(prId);
    const BipartiteBox diff = make_box_unchecked(subtract(P, {{r.mu, &pr}}));
    std::vector<std::size_t> order(merminIds.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    auto rank = [&](std::size_t k) {
      const bool canonical = components[k].first == prId || components[k].second == prId;
      const auto& op = operators[k];
      return std::make_pair(canonical ? 0 : 1, -mermin_value(diff, op[0], op[1], op[2]));
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      const auto a = rank(i), b = rank(j);
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second - kEps;
    });
    for (std::size_t k : order) {
      const BipartiteBox mm = vertex(merminIds[k]);
      r.prId = prId;
      r.merminId = merminIds[k];
      r.method = first ? "canonical" : "frame-search";
      first = false;
      if (r.mu + r.nu >= 1.0 - kEps) {
        r.status = DecompositionStatus::DegenerateMu;
        r.residual = r.nu > r.mu ? mm : pr;
        if (reconstruction_error(P, r) <= kLpEps) {
          r.reconstructionError = reconstruction_error(P, r);
          return r;
        }
        continue;
      }
      auto res = residual_box(P, {{r.mu, &pr}, {r.nu, &mm}});
      if (res && bell_discord(*res) <= kDiscordZero && mermin_discord(*res) <= kDiscordZero) {
        r.residual = *res;
        r.reconstructionError = reconstruction_error(P, r);
        return r;
      }
    }
  }
  throw Error(ErrorCode::ResidualInvalid, "no PR/Mermin frame yields a residual with zero Bell and Mermin discord");
}

}  // namespace boxlab
