#include "boxlab/tribox.hpp"

#include <cmath>
#include <sstream>

namespace boxlab {

namespace {

using Table3 = std::array<double, TripartiteBox::kSize>;

template <class Fn>
void for_each_index(Fn fn) {
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) fn(x, y, z, a, b, c);
}

template <class Rule>
Table3 table3_from_rule(Rule rule) {
  Table3 t{};
  for_each_index([&](int x, int y, int z, int a, int b, int c) { t[TripartiteBox::index(x, y, z, a, b, c)] = rule(x, y, z, a, b, c); });
  return t;
}

std::string bits_str(const std::array<int, 6>& b, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += static_cast<char>('0' + b[i]);
  return s;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

bool parse_bits(const std::string& s, std::size_t n, std::array<int, 6>& out) {
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != '0' && s[i] != '1') return false;
    out[i] = s[i] - '0';
  }
  return true;
}

// Pair marginal P(u,v|s,t) of the two parties in `pair`, evaluated with the third input r.
double pair_marginal(std::span<const double> p, Pair pair, int s, int t, int r, int u, int v) {
  double sum = 0;
  for (int w = 0; w < 2; ++w) {
    switch (pair) {
      case Pair::AB: sum += p[TripartiteBox::index(s, t, r, u, v, w)]; break;
      case Pair::AC: sum += p[TripartiteBox::index(s, r, t, u, w, v)]; break;
      case Pair::BC: sum += p[TripartiteBox::index(r, s, t, w, u, v)]; break;
    }
  }
  return sum;
}

const char* pair_name(Pair p) {
  switch (p) {
    case Pair::AB: return "AB";
    case Pair::AC: return "AC";
    case Pair::BC: return "BC";
  }
  return "?";
}

}  // namespace

std::string validate_table3(std::span<const double> p, ErrorCode* code, double tol) {
  auto fail = [&](ErrorCode c, const std::string& msg) {
    if (code) *code = c;
    return msg;
  };
  if (p.size() != TripartiteBox::kSize)
    return fail(ErrorCode::InvalidInput, "expected 64 entries, got " + std::to_string(p.size()));
  for (int i = 0; i < TripartiteBox::kSize; ++i) {
    if (!std::isfinite(p[i])) return fail(ErrorCode::InvalidInput, "non-finite entry at flat index " + std::to_string(i));
    if (p[i] < -tol) {
      std::ostringstream os;
      os << "entry at flat index " << i << " = " << p[i];
      return fail(ErrorCode::Negative, os.str());
    }
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        double s = 0;
        for (int o = 0; o < 8; ++o) s += p[TripartiteBox::index(x, y, z, 0, 0, 0) + o];
        if (std::abs(s - 1.0) > tol) {
          std::ostringstream os;
          os << "sum over outputs at [x=" << x << "][y=" << y << "][z=" << z << "] is " << s;
          return fail(ErrorCode::NotNormalized, os.str());
        }
      }
  for (Pair pair : {Pair::AB, Pair::AC, Pair::BC})
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        for (int u = 0; u < 2; ++u)
          for (int v = 0; v < 2; ++v) {
            const double m0 = pair_marginal(p, pair, s, t, 0, u, v);
            const double m1 = pair_marginal(p, pair, s, t, 1, u, v);
            if (std::abs(m0 - m1) > tol) {
              std::ostringstream os;
              os << pair_name(pair) << " marginal at inputs (" << s << "," << t << ") outputs (" << u << "," << v
                 << ") depends on the third input: " << m0 << " vs " << m1;
              return fail(ErrorCode::Signaling, os.str());
            }
          }
  return {};
}

TripartiteBox make_box3(std::span<const double> p, double tol) {
  ErrorCode code{};
  const std::string msg = validate_table3(p, &code, tol);
  if (!msg.empty()) throw Error(code, msg);
  TripartiteBox box;
  for (int i = 0; i < TripartiteBox::kSize; ++i) box.p_[i] = p[i] < 0.0 ? 0.0 : p[i];
  return box;
}

TripartiteBox make_box3_unchecked(const Table3& p) {
  TripartiteBox box;
  box.p_ = p;
  return box;
}

TriVertexId TriVertexId::sv(int al, int be, int ga, int ep) { return {TriVertexKind::Sv, {al & 1, be & 1, ga & 1, ep & 1, 0, 0}}; }
TriVertexId TriVertexId::det3(int al, int be, int ga, int ep, int ze, int et) {
  return {TriVertexKind::Det3, {al & 1, be & 1, ga & 1, ep & 1, ze & 1, et & 1}};
}
TriVertexId TriVertexId::pr_pair(TriVertexKind k, int al, int be, int ga, int ep) {
  if (k != TriVertexKind::PrAB && k != TriVertexKind::PrAC && k != TriVertexKind::PrBC)
    throw Error(ErrorCode::InvalidVertex, "pr_pair requires a PR embedding kind");
  return {k, {al & 1, be & 1, ga & 1, ep & 1, 0, 0}};
}
TriVertexId TriVertexId::mermin3(int al, int be, int ga, int ep) {
  return {TriVertexKind::Mermin3, {al & 1, be & 1, ga & 1, ep & 1, 0, 0}};
}
TriVertexId TriVertexId::class8() { return {TriVertexKind::Class8Rep, {}}; }
TriVertexId TriVertexId::noise3() { return {TriVertexKind::Noise3, {}}; }

std::string TriVertexId::label() const {
  switch (kind) {
    case TriVertexKind::Sv: return "Sv" + bits_str(bits, 4);
    case TriVertexKind::Det3: return "Det3_" + bits_str(bits, 6);
    case TriVertexKind::PrAB: return "PrAB" + bits_str(bits, 4);
    case TriVertexKind::PrAC: return "PrAC" + bits_str(bits, 4);
    case TriVertexKind::PrBC: return "PrBC" + bits_str(bits, 4);
    case TriVertexKind::Mermin3: return "Mermin3_" + bits_str(bits, 4);
    case TriVertexKind::Class8Rep: return "Class8";
    case TriVertexKind::Noise3: return "Noise3";
  }
  return "?";
}

TriVertexId parse_tri_vertex_id(const std::string& label) {
  std::array<int, 6> b{};
  if (label == "Class8") return TriVertexId::class8();
  if (label == "Noise3") return TriVertexId::noise3();
  if (starts_with(label, "Sv") && parse_bits(label.substr(2), 4, b)) return TriVertexId::sv(b[0], b[1], b[2], b[3]);
  if (starts_with(label, "Det3_") && parse_bits(label.substr(5), 6, b))
    return TriVertexId::det3(b[0], b[1], b[2], b[3], b[4], b[5]);
  if (starts_with(label, "Mermin3_") && parse_bits(label.substr(8), 4, b))
    return TriVertexId::mermin3(b[0], b[1], b[2], b[3]);
  const std::pair<const char*, TriVertexKind> prs[] = {
      {"PrAB", TriVertexKind::PrAB}, {"PrAC", TriVertexKind::PrAC}, {"PrBC", TriVertexKind::PrBC}};
  for (const auto& [prefix, kind] : prs)
    if (starts_with(label, prefix) && parse_bits(label.substr(4), 4, b))
      return TriVertexId::pr_pair(kind, b[0], b[1], b[2], b[3]);
  throw Error(ErrorCode::UnknownName, "unknown tripartite vertex label '" + label + "'");
}

namespace {

Table3 sv_table(int al, int be, int ga, int ep) {
  return table3_from_rule([&](int x, int y, int z, int a, int b, int c) {
    const int rhs = (x * y) ^ (x * z) ^ (y * z) ^ (al * x) ^ (be * y) ^ (ga * z) ^ ep;
    return (a ^ b ^ c) == rhs ? 0.25 : 0.0;
  });
}

Expectations3 class8_expectations() {
  Expectations3 e;
  e.pair[0][0][0] = 1;  // A0B0
  e.pair[0][0][1] = 1;  // A0B1
  e.pair[1][0][0] = 1;  // A0C0
  e.pair[2][0][0] = 1;  // B0C0
  e.pair[2][1][0] = 1;  // B1C0
  e.triple[1][0][1] = 1;
  e.triple[1][1][1] = -1;
  return e;
}

}  // namespace

TripartiteBox tri_vertex(const TriVertexId& id) {
  const auto& v = id.bits;
  switch (id.kind) {
    case TriVertexKind::Sv:
      return make_box3_unchecked(sv_table(v[0], v[1], v[2], v[3]));
    case TriVertexKind::Det3:
      return make_box3_unchecked(table3_from_rule([&](int x, int y, int z, int a, int b, int c) {
        return (a == ((v[0] * x) ^ v[1]) && b == ((v[2] * y) ^ v[3]) && c == ((v[4] * z) ^ v[5])) ? 1.0 : 0.0;
      }));
    case TriVertexKind::PrAB:
      return make_box3_unchecked(table3_from_rule([&](int x, int y, int z, int a, int b, int c) {
        return ((a ^ b) == ((x * y) ^ (v[0] * x) ^ (v[1] * y) ^ v[2]) && c == v[3] * z) ? 0.5 : 0.0;
      }));
    case TriVertexKind::PrAC:
      return make_box3_unchecked(table3_from_rule([&](int x, int y, int z, int a, int b, int c) {
        return ((a ^ c) == ((x * z) ^ (v[0] * x) ^ (v[1] * z) ^ v[2]) && b == v[3] * y) ? 0.5 : 0.0;
      }));
    case TriVertexKind::PrBC:
      return make_box3_unchecked(table3_from_rule([&](int x, int y, int z, int a, int b, int c) {
        return ((b ^ c) == ((y * z) ^ (v[0] * y) ^ (v[1] * z) ^ v[2]) && a == v[3] * x) ? 0.5 : 0.0;
      }));
    case TriVertexKind::Mermin3: {
      const Table3 s1 = sv_table(v[0], v[1], v[2], v[3]);
      const Table3 s2 = sv_table(v[0] ^ 1, v[1] ^ 1, v[2] ^ 1, v[3] ^ v[0] ^ v[1] ^ v[2]);
      Table3 t{};
      for (int i = 0; i < TripartiteBox::kSize; ++i) t[i] = 0.5 * (s1[i] + s2[i]);
      return make_box3_unchecked(t);
    }
    case TriVertexKind::Class8Rep: {
      const Table3 t = table_from_expectations(class8_expectations());
      ErrorCode code{};
      const std::string msg = validate_table3(t, &code);
      if (!msg.empty()) throw Error(ErrorCode::InvalidVertex, "class-8 expansion is not a valid box: " + msg);
      return make_box3_unchecked(t);
    }
    case TriVertexKind::Noise3: {
      Table3 t;
      t.fill(0.125);
      return make_box3_unchecked(t);
    }
  }
  throw Error(ErrorCode::InvalidVertex, "unhandled tripartite vertex kind");
}

std::vector<TriVertexId> all_tri_vertex_ids(TriVertexKind kind) {
  std::vector<TriVertexId> ids;
  switch (kind) {
    case TriVertexKind::Sv:
    case TriVertexKind::Mermin3:
    case TriVertexKind::PrAB:
    case TriVertexKind::PrAC:
    case TriVertexKind::PrBC:
      for (int i = 0; i < 16; ++i) ids.push_back({kind, {(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1, 0, 0}});
      break;
    case TriVertexKind::Det3:
      for (int i = 0; i < 64; ++i)
        ids.push_back({kind, {(i >> 5) & 1, (i >> 4) & 1, (i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1}});
      break;
    case TriVertexKind::Class8Rep:
      ids.push_back(TriVertexId::class8());
      break;
    case TriVertexKind::Noise3:
      ids.push_back(TriVertexId::noise3());
      break;
  }
  return ids;
}

TripartiteBox mix3(std::span<const TripartiteBox> boxes, std::span<const double> weights) {
  if (boxes.size() != weights.size() || boxes.empty())
    throw Error(ErrorCode::BadWeights, "need one weight per box and at least one box");
  double total = 0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < -kEps) throw Error(ErrorCode::BadWeights, "negative weight " + std::to_string(w));
    total += w;
  }
  if (std::abs(total - 1.0) > kEps) throw Error(ErrorCode::BadWeights, "weights sum to " + std::to_string(total));
  Table3 t{};
  for (std::size_t k = 0; k < boxes.size(); ++k)
    for (int i = 0; i < TripartiteBox::kSize; ++i) t[i] += weights[k] * boxes[k].data()[i];
  return make_box3(t);
}

double expectation3(const TripartiteBox& P, int i, int j, int k) {
  double e = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) e += sgn_bit(a ^ b ^ c) * P(i, j, k, a, b, c);
  return e;
}

double pair_expectation(const TripartiteBox& P, Pair pair, int i, int j) {
  double e = 0;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) e += sgn_bit(u ^ v) * pair_marginal(P.data(), pair, i, j, 0, u, v);
  return e;
}

double single_expectation(const TripartiteBox& P, Party3 party, int i) {
  double e = 0;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      for (int w = 0; w < 2; ++w) {
        const double pr = party == Party3::A ? P(i, 0, 0, u, v, w) : party == Party3::B ? P(0, i, 0, v, u, w) : P(0, 0, i, v, w, u);
        e += sgn_bit(u) * pr;
      }
  return e;
}

Expectations3 expectations(const TripartiteBox& P) {
  Expectations3 e;
  const Party3 parties[3] = {Party3::A, Party3::B, Party3::C};
  const Pair pairs[3] = {Pair::AB, Pair::AC, Pair::BC};
  for (int q = 0; q < 3; ++q)
    for (int i = 0; i < 2; ++i) e.single[q][i] = single_expectation(P, parties[q], i);
  for (int q = 0; q < 3; ++q)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e.pair[q][i][j] = pair_expectation(P, pairs[q], i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) e.triple[i][j][k] = expectation3(P, i, j, k);
  return e;
}

Table3 table_from_expectations(const Expectations3& e) {
  return table3_from_rule([&](int i, int j, int k, int m, int n, int o) {
    double s = 1.0;
    s += sgn_bit(m) * e.single[0][i] + sgn_bit(n) * e.single[1][j] + sgn_bit(o) * e.single[2][k];
    s += sgn_bit(m ^ n) * e.pair[0][i][j] + sgn_bit(m ^ o) * e.pair[1][i][k] + sgn_bit(n ^ o) * e.pair[2][j][k];
    s += sgn_bit(m ^ n ^ o) * e.triple[i][j][k];
    return s / 8.0;
  });
}

BipartiteBox marginal2(const TripartiteBox& P, Pair pair) {
  std::array<double, BipartiteBox::kSize> t{};
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 2; ++u)
      for (int tt = 0; tt < 2; ++tt)
        for (int v = 0; v < 2; ++v) t[BipartiteBox::index(s, tt, u, v)] = pair_marginal(P.data(), pair, s, tt, 0, u, v);
  return make_box(t);
}

Lro3 Lro3::from_code(int c) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  Lro3 g;
  const int local = c % 512;
  g.perm = perms[(c / 512) % 6];
  g.local = {LocalRelabel::from_code((local >> 6) & 7), LocalRelabel::from_code((local >> 3) & 7),
             LocalRelabel::from_code(local & 7)};
  return g;
}

TripartiteBox apply_lro3(const TripartiteBox& P, const Lro3& g) {
  Table3 t{};
  for_each_index([&](int x, int y, int z, int a, int b, int c) {
    const int in[3] = {x, y, z};
    const int out[3] = {a, b, c};
    int nin[3], nout[3];
    for (int k = 0; k < 3; ++k) {
      const auto& L = g.local[k];
      nin[g.perm[k]] = in[k] ^ L.inputFlip;
      nout[g.perm[k]] = out[k] ^ (L.outputFlipByInput & in[k]) ^ L.outputFlipConst;
    }
    t[TripartiteBox::index(nin[0], nin[1], nin[2], nout[0], nout[1], nout[2])] = P(x, y, z, a, b, c);
  });
  return make_box3_unchecked(t);
}

}  // namespace boxlab
